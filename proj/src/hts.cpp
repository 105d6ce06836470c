#include "rchopf/hts.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace rchopf {

std::string HtsMonomial::str() const {
  std::ostringstream os;
  const char* sep = "";
  if (!alpha.is_one()) { os << "a[" << alpha.str() << "]"; sep = " "; }
  if (!beta.is_one()) { os << sep << "b[" << beta.str() << "]"; sep = " "; }
  if (!h.is_unit() || *sep == '\0') os << sep << h.str();
  return os.str();
}

namespace hts {
namespace {

const PMonomial kZ0 = PMonomial::var(0);

// Terms of X(P) for a monomial P.
template <class F>
void for_each_x_derivative(const PMonomial& p, F&& f) {
  for (std::size_t j = 0; j < p.exps.size(); ++j) {
    if (p.exps[j] == 0) continue;
    auto e = p.exps;
    e[j] -= 1;
    if (e.size() == j + 1) e.push_back(0);
    e[j + 1] += 1;
    f(PMonomial(std::move(e)), Rational(static_cast<long>(p.exps[j])));
  }
}

// Left multiplication by X of a normal-ordered monomial, using
//   X a(P) = a(P) X + a(X P)
//   X b(Q) = b(Q) X + b(X Q) + b(Y Q) delta_1
//   X delta_1^a = delta_1^a X + a delta_1^{a-1} delta_2.
void add_left_x(HtsElement& out, const HtsMonomial& m, const Rational& c) {
  const auto& [d1, x, y] = m.h;
  out.add(HtsMonomial(m.alpha, m.beta, {d1, x + 1, y}), c);
  for_each_x_derivative(m.alpha, [&](PMonomial p, const Rational& k) {
    out.add(HtsMonomial(std::move(p), m.beta, m.h), c * k);
  });
  for_each_x_derivative(m.beta, [&](PMonomial q, const Rational& k) {
    out.add(HtsMonomial(m.alpha, std::move(q), m.h), c * k);
  });
  if (const unsigned wq = m.beta.weight(); wq > 0)
    out.add(HtsMonomial(m.alpha, m.beta, {d1 + 1, x, y}), c * Rational(static_cast<long>(wq)));
  if (d1 > 0) {
    const Rational a(static_cast<long>(d1));
    out.add(HtsMonomial(m.alpha, m.beta, {d1 + 1, x, y}), c * a / Rational(2));
    out.add(HtsMonomial(m.alpha * kZ0, m.beta, {d1 - 1, x, y}), c * a);
    out.add(HtsMonomial(m.alpha, m.beta * kZ0, {d1 - 1, x, y}), -c * a);
  }
}

// X^k * core where core has no Y part. Memoized per (k, core).
class XPowerCache {
 public:
  const HtsElement& get(unsigned k, const HtsMonomial& core) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find({k, core});
      if (it != cache_.end()) return it->second;
    }
    HtsElement value;
    if (k == 0) {
      value = HtsElement(core);
    } else {
      const HtsElement& prev = get(k - 1, core);
      for (const auto& [m, c] : prev) add_left_x(value, m, c);
    }
    std::lock_guard<std::mutex> lock(mu_);
    // Racing writers compute identical values; keep the first.
    return cache_.try_emplace({k, core}, std::move(value)).first->second;
  }
  std::size_t size() {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.size();
  }

 private:
  std::mutex mu_;
  std::map<std::pair<unsigned, HtsMonomial>, HtsElement> cache_;
};

XPowerCache& xpower_cache() {
  static XPowerCache cache;
  return cache;
}

}  // namespace

HtsElement multiply(const HtsMonomial& a, const HtsMonomial& b) {
  // Y^m (w Y^n) = w (Y + wt w)^m Y^n, then X^k, then the left factors.
  HtsMonomial core = b;
  core.h.y = 0;
  const HtsElement& xk = xpower_cache().get(a.h.x, core);
  const Rational wt(static_cast<long>(b.weight()));
  HtsElement out;
  for (unsigned i = 0; i <= a.h.y; ++i) {
    const Rational shift = binomial(a.h.y, i) * pow(wt, a.h.y - i);
    for (const auto& [m, c] : xk) {
      out.add(HtsMonomial(a.alpha * m.alpha, a.beta * m.beta,
                          {a.h.d1 + m.h.d1, m.h.x, m.h.y + b.h.y + i}),
              c * shift);
    }
  }
  return out;
}

HtsElement multiply(const HtsElement& a, const HtsElement& b) {
  HtsElement out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) out.add(multiply(ma, mb), ca * cb);
  return out;
}

HtsElement power(const HtsElement& a, unsigned n) {
  HtsElement r = unit();
  for (unsigned i = 0; i < n; ++i) r = multiply(r, a);
  return r;
}

HtsElement commutator(const HtsElement& a, const HtsElement& b) {
  return multiply(a, b) - multiply(b, a);
}

HtsElement right_multiply_poly(const HtsElement& a, const YPolynomial& p) {
  HtsElement out;
  for (const auto& [m, c] : a)
    for (const auto& [e, pc] : p.coefficients())
      out.add(HtsMonomial(m.alpha, m.beta, {m.h.d1, m.h.x, m.h.y + e}), c * pc);
  return out;
}

HtsElement unit() { return HtsElement(HtsMonomial{}); }
HtsElement X() { return HtsElement(HtsMonomial({0, 1, 0})); }
HtsElement Y() { return HtsElement(HtsMonomial({0, 0, 1})); }
HtsElement delta1() { return HtsElement(HtsMonomial({1, 0, 0})); }

HtsElement delta2() {
  HtsElement d;
  d.add(HtsMonomial({2, 0, 0}), Rational(1, 2));
  d.add(HtsMonomial(kZ0, {}, {}), Rational(1));
  d.add(HtsMonomial({}, kZ0, {}), Rational(-1));
  return d;
}

HtsElement antipode_x() { return -X() + HtsElement(HtsMonomial({1, 0, 1})); }

HtsElement alpha(const PElement& p) {
  HtsElement out;
  for (const auto& [m, c] : p) out.add(HtsMonomial(m, {}, {}), c);
  return out;
}

HtsElement beta(const PElement& q) {
  HtsElement out;
  for (const auto& [m, c] : q) out.add(HtsMonomial({}, m, {}), c);
  return out;
}

HtsElement embed(const HsElement& h) {
  HtsElement out;
  for (const auto& [m, c] : h) out.add(HtsMonomial(m), c);
  return out;
}

HtsElement from_poly(const YPolynomial& p) { return right_multiply_poly(unit(), p); }

namespace {

const HtsElement& delta_image(unsigned n) {
  static std::mutex mu;
  static std::vector<HtsElement> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) {
    cache.push_back(delta1());
    cache.push_back(delta2());
  }
  while (cache.size() < n) cache.push_back(commutator(X(), cache.back()));
  return cache[n - 1];
}

}  // namespace

HtsElement from_h1(const H1Element& h) {
  HtsElement out;
  for (const auto& [m, c] : h) {
    HtsElement term = unit();
    for (std::size_t i = 0; i < m.deltas.size(); ++i)
      for (unsigned e = 0; e < m.deltas[i]; ++e)
        term = multiply(term, delta_image(static_cast<unsigned>(i + 1)));
    term = multiply(term, HtsElement(HtsMonomial({0, m.x, m.y})));
    out.add(term, c);
  }
  return out;
}

PElement counit(const HtsElement& h) {
  PElement out;
  for (const auto& [m, c] : h)
    if (m.h.is_unit()) out.add(m.alpha * m.beta, c);
  return out;
}

HtsElement antipode(const HtsElement& h) {
  HtsElement out;
  const HtsElement sx = antipode_x();
  for (const auto& [m, c] : h) {
    HtsElement s = power(-Y(), m.h.y);
    s = multiply(s, power(sx, m.h.x));
    s = multiply(s, power(-delta1(), m.h.d1));
    s = multiply(s, HtsElement(HtsMonomial(m.beta, m.alpha, {})));
    out.add(s, c);
  }
  return out;
}

bool has_weight(const HtsElement& h, long w) {
  for (const auto& [m, c] : h)
    if (static_cast<long>(m.weight()) != w) return false;
  return true;
}

HsElement specialize_zero(const HtsElement& h) {
  HsElement out;
  for (const auto& [m, c] : h)
    if (m.alpha.is_one() && m.beta.is_one()) out.add(m.h, c);
  return out;
}

std::size_t product_cache_size() { return xpower_cache().size(); }

}  // namespace hts
}  // namespace rchopf
