#include "rchopf/h1.hpp"

#include <mutex>
#include <sstream>

namespace rchopf {

H1Monomial::H1Monomial(std::vector<unsigned> d, unsigned x_exp, unsigned y_exp)
    : deltas(std::move(d)), x(x_exp), y(y_exp) {
  while (!deltas.empty() && deltas.back() == 0) deltas.pop_back();
}

H1Monomial H1Monomial::delta(unsigned n, unsigned e) {
  std::vector<unsigned> d(n, 0);
  d[n - 1] = e;
  return {std::move(d), 0, 0};
}

unsigned H1Monomial::delta_weight() const {
  unsigned w = 0;
  for (std::size_t i = 0; i < deltas.size(); ++i) w += static_cast<unsigned>(i + 1) * deltas[i];
  return w;
}

std::strong_ordering operator<=>(const H1Monomial& a, const H1Monomial& b) {
  if (auto c = a.delta_weight() <=> b.delta_weight(); c != 0) return c;
  if (auto c = a.x <=> b.x; c != 0) return c;
  if (auto c = a.y <=> b.y; c != 0) return c;
  return a.deltas <=> b.deltas;
}

std::string H1Monomial::str() const {
  std::ostringstream os;
  const char* sep = "";
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (deltas[i] == 0) continue;
    os << sep << "d" << i + 1;
    if (deltas[i] > 1) os << "^" << deltas[i];
    sep = " ";
  }
  if (x > 0) { os << sep << "X"; if (x > 1) os << "^" << x; sep = " "; }
  if (y > 0) { os << sep << "Y"; if (y > 1) os << "^" << y; sep = " "; }
  if (*sep == '\0') os << "1";
  return os.str();
}

namespace h1 {
namespace {

// X * (D X^k Y^m) = D X^{k+1} Y^m + [X, D] X^k Y^m with [X, delta_n] = delta_{n+1}.
H1Element left_x(const H1Monomial& m) {
  H1Element out;
  out.add(H1Monomial(m.deltas, m.x + 1, m.y), Rational(1));
  for (std::size_t i = 0; i < m.deltas.size(); ++i) {
    const unsigned e = m.deltas[i];
    if (e == 0) continue;
    auto d = m.deltas;
    d[i] -= 1;
    if (d.size() == i + 1) d.push_back(0);
    d[i + 1] += 1;
    out.add(H1Monomial(std::move(d), m.x, m.y), Rational(static_cast<long>(e)));
  }
  return out;
}

H1Element left_x(const H1Element& h) {
  H1Element out;
  for (const auto& [m, c] : h) out.add(left_x(m), c);
  return out;
}

H1Element multiply_monomials(const H1Monomial& a, const H1Monomial& b) {
  // Y^m b = b (Y + wt b)^m
  H1Element cur;
  const Rational wt(static_cast<long>(b.weight()));
  for (unsigned i = 0; i <= a.y; ++i)
    cur.add(H1Monomial(b.deltas, b.x, b.y + i), binomial(a.y, i) * pow(wt, a.y - i));
  for (unsigned k = 0; k < a.x; ++k) cur = left_x(cur);
  if (a.deltas.empty()) return cur;
  H1Element out;
  for (const auto& [m, c] : cur) {
    auto d = m.deltas;
    if (d.size() < a.deltas.size()) d.resize(a.deltas.size(), 0);
    for (std::size_t i = 0; i < a.deltas.size(); ++i) d[i] += a.deltas[i];
    out.add(H1Monomial(std::move(d), m.x, m.y), c);
  }
  return out;
}

}  // namespace

H1Element unit() { return H1Element(H1Monomial{}); }
H1Element X() { return H1Element(H1Monomial({}, 1, 0)); }
H1Element Y() { return H1Element(H1Monomial({}, 0, 1)); }
H1Element delta(unsigned n) { return H1Element(H1Monomial::delta(n)); }

H1Element multiply(const H1Element& a, const H1Element& b) {
  return bilinear<H1Monomial, H1Element>(a, b, multiply_monomials);
}

H1Element power(const H1Element& a, unsigned n) {
  H1Element r = unit();
  for (unsigned i = 0; i < n; ++i) r = multiply(r, a);
  return r;
}

H1Element commutator(const H1Element& a, const H1Element& b) {
  return multiply(a, b) - multiply(b, a);
}

H1Tensor2 tensor(const H1Element& a, const H1Element& b) {
  H1Tensor2 out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) out.add({ma, mb}, ca * cb);
  return out;
}

H1Tensor2 tensor_multiply(const H1Tensor2& a, const H1Tensor2& b) {
  H1Tensor2 out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      const auto left = multiply_monomials(ma.first, mb.first);
      const auto right = multiply_monomials(ma.second, mb.second);
      out.add(tensor(left, right), ca * cb);
    }
  return out;
}

namespace {

const H1Tensor2& delta_coproduct(unsigned n) {
  static std::mutex mu;
  static std::vector<H1Tensor2> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache.push_back(tensor(delta(1), unit()) + tensor(unit(), delta(1)));
  const H1Tensor2 dx = tensor(X(), unit()) + tensor(unit(), X()) + tensor(delta(1), Y());
  while (cache.size() < n) {
    const H1Tensor2& prev = cache.back();
    cache.push_back(tensor_multiply(dx, prev) - tensor_multiply(prev, dx));
  }
  return cache[n - 1];
}

const H1Element& delta_antipode(unsigned n) {
  static std::mutex mu;
  static std::vector<H1Element> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache.push_back(-delta(1));
  const H1Element sx = -X() + multiply(delta(1), Y());
  while (cache.size() < n) {
    const H1Element prev = cache.back();
    cache.push_back(commutator(prev, sx));
  }
  return cache[n - 1];
}

H1Tensor2 coproduct_monomial(const H1Monomial& m) {
  H1Tensor2 out = tensor(unit(), unit());
  for (std::size_t i = 0; i < m.deltas.size(); ++i)
    for (unsigned e = 0; e < m.deltas[i]; ++e)
      out = tensor_multiply(out, delta_coproduct(static_cast<unsigned>(i + 1)));
  const H1Tensor2 dx = tensor(X(), unit()) + tensor(unit(), X()) + tensor(delta(1), Y());
  const H1Tensor2 dy = tensor(Y(), unit()) + tensor(unit(), Y());
  for (unsigned k = 0; k < m.x; ++k) out = tensor_multiply(out, dx);
  for (unsigned k = 0; k < m.y; ++k) out = tensor_multiply(out, dy);
  return out;
}

H1Element antipode_monomial(const H1Monomial& m) {
  const H1Element sx = -X() + multiply(delta(1), Y());
  H1Element out = power(-Y(), m.y);
  out = multiply(out, power(sx, m.x));
  for (std::size_t i = 0; i < m.deltas.size(); ++i)
    out = multiply(out, power(delta_antipode(static_cast<unsigned>(i + 1)), m.deltas[i]));
  return out;
}

}  // namespace

H1Tensor2 coproduct(const H1Element& h) {
  H1Tensor2 out;
  for (const auto& [m, c] : h) out.add(coproduct_monomial(m), c);
  return out;
}

Rational counit(const H1Element& h) { return h.coefficient(H1Monomial{}); }

H1Element antipode(const H1Element& h) {
  H1Element out;
  for (const auto& [m, c] : h) out.add(antipode_monomial(m), c);
  return out;
}

H1Element multiply_legs(const H1Tensor2& t) {
  H1Element out;
  for (const auto& [m, c] : t) out.add(multiply_monomials(m.first, m.second), c);
  return out;
}

H1Tensor2 apply_legs(const H1Tensor2& t, H1Element (*left)(const H1Element&),
                     H1Element (*right)(const H1Element&)) {
  H1Tensor2 out;
  for (const auto& [m, c] : t) {
    const H1Element l = left ? left(H1Element(m.first)) : H1Element(m.first);
    const H1Element r = right ? right(H1Element(m.second)) : H1Element(m.second);
    out.add(tensor(l, r), c);
  }
  return out;
}

}  // namespace h1
}  // namespace rchopf
