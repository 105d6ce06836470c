#include "rchopf/tensor.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace rchopf {

HtsMonomial Chain::leg(unsigned i) const {
  HtsMonomial m(slots[i], {}, ops[i]);
  if (i + 1 == ops.size()) m.beta = slots[i + 1];
  return m;
}

std::string Chain::str() const {
  std::ostringstream os;
  for (unsigned i = 0; i < ops.size(); ++i) {
    if (i > 0) os << " (x) ";
    os << leg(i).str();
  }
  if (ops.empty()) os << (slots.empty() ? std::string("1") : slots.front().str());
  return os.str();
}

TensorElement TensorElement::unit(unsigned rank) {
  TensorElement t(rank);
  Chain c;
  c.slots.assign(rank + 1, PMonomial{});
  c.ops.assign(rank, HsMonomial{});
  t.add(c, Rational(1));
  return t;
}

void TensorElement::add(const Chain& c, const Rational& coef) {
  if (c.rank() != rank_) throw std::invalid_argument("TensorElement: rank mismatch");
  terms_.add(c, coef);
}

void TensorElement::add(const TensorElement& other, const Rational& scale) {
  if (other.rank_ != rank_) throw std::invalid_argument("TensorElement: rank mismatch");
  terms_.add(other.terms_, scale);
}

TensorElement& TensorElement::operator*=(const Rational& s) {
  terms_ *= s;
  return *this;
}

std::string TensorElement::str() const {
  if (terms_.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, coef] : terms_) {
    if (!first) os << " + ";
    os << "(" << coef << ") " << c.str();
    first = false;
  }
  return os.str();
}

namespace tensor {
namespace {

Chain chain_from_legs(const std::vector<HtsMonomial>& legs) {
  Chain c;
  c.slots.reserve(legs.size() + 1);
  c.ops.reserve(legs.size());
  c.slots.emplace_back();
  for (const auto& leg : legs) {
    c.slots.back() = c.slots.back() * leg.alpha;
    c.ops.push_back(leg.h);
    c.slots.push_back(leg.beta);
  }
  return c;
}

std::vector<HtsMonomial> legs_of(const Chain& c) {
  std::vector<HtsMonomial> legs;
  legs.reserve(c.rank());
  for (unsigned i = 0; i < c.rank(); ++i) legs.push_back(c.leg(i));
  return legs;
}

// Sum over the cartesian product of leg expansions.
void add_product(TensorElement& out, const std::vector<HtsElement>& legs, const Rational& scale) {
  std::vector<HtsMonomial> current(legs.size());
  auto rec = [&](auto&& self, std::size_t i, const Rational& coef) -> void {
    if (i == legs.size()) {
      out.add(chain_from_legs(current), coef);
      return;
    }
    for (const auto& [m, c] : legs[i]) {
      current[i] = m;
      self(self, i + 1, coef * c);
    }
  };
  for (const auto& leg : legs)
    if (leg.is_zero()) return;
  rec(rec, 0, scale);
}

HtsTensor2 plain_multiply(const HtsTensor2& a, const HtsTensor2& b) {
  HtsTensor2 out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      const HtsElement l = hts::multiply(ma.first, mb.first);
      const HtsElement r = hts::multiply(ma.second, mb.second);
      for (const auto& [ml, cl] : l)
        for (const auto& [mr, cr] : r) out.add({ml, mr}, ca * cb * cl * cr);
    }
  return out;
}

const HtsTensor2& coproduct_x_power(unsigned k) {
  static std::mutex mu;
  static std::vector<HtsTensor2> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) {
    HtsTensor2 one;
    one.add({HtsMonomial{}, HtsMonomial{}}, Rational(1));
    cache.push_back(one);
  }
  HtsTensor2 dx;
  dx.add({HtsMonomial({0, 1, 0}), HtsMonomial{}}, Rational(1));
  dx.add({HtsMonomial{}, HtsMonomial({0, 1, 0})}, Rational(1));
  dx.add({HtsMonomial({1, 0, 0}), HtsMonomial({0, 0, 1})}, Rational(1));
  while (cache.size() <= k) cache.push_back(plain_multiply(cache.back(), dx));
  return cache[k];
}

}  // namespace

const HtsTensor2& coproduct_plain(const HsMonomial& m) {
  static std::mutex mu;
  static std::map<HsMonomial, HtsTensor2> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  // Delta(delta_1^a X^k Y^m) = Delta(delta_1)^a Delta(X)^k Delta(Y)^m; the
  // delta_1 powers multiply trivially on the left and Y powers on the right.
  const HtsTensor2& dxk = coproduct_x_power(m.x);
  HtsTensor2 value;
  for (unsigned i = 0; i <= m.d1; ++i)
    for (unsigned j = 0; j <= m.y; ++j) {
      const Rational c = binomial(m.d1, i) * binomial(m.y, j);
      for (const auto& [pair, coef] : dxk) {
        HtsMonomial l = pair.first, r = pair.second;
        l.h.d1 += i;
        r.h.d1 += m.d1 - i;
        l.h.y += j;
        r.h.y += m.y - j;
        value.add({l, r}, coef * c);
      }
    }
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace(m, std::move(value)).first->second;
}

TensorElement canonicalize(const std::vector<HtsElement>& legs) {
  TensorElement out(static_cast<unsigned>(legs.size()));
  add_product(out, legs, Rational(1));
  return out;
}

TensorElement right_multiply(const TensorElement& t, const std::vector<HtsElement>& f) {
  if (f.size() != t.rank()) throw std::invalid_argument("right_multiply: leg count mismatch");
  TensorElement out(t.rank());
  std::vector<HtsElement> legs(t.rank());
  for (const auto& [c, coef] : t.terms()) {
    for (unsigned i = 0; i < t.rank(); ++i) legs[i] = hts::multiply(HtsElement(c.leg(i)), f[i]);
    add_product(out, legs, coef);
  }
  return out;
}

TensorElement right_multiply(const TensorElement& t, const TensorElement& f) {
  if (f.rank() != t.rank()) throw std::invalid_argument("right_multiply: rank mismatch");
  return right_multiply_lifted(t, f, 0);
}

TensorElement right_multiply_lifted(const TensorElement& t, const TensorElement& f, unsigned offset) {
  if (offset + f.rank() > t.rank())
    throw std::invalid_argument("right_multiply_lifted: factor does not fit");
  TensorElement out(t.rank());
  std::vector<HtsElement> legs(t.rank());
  std::vector<HtsMonomial> f_legs(t.rank());
  for (const auto& [cf, coef_f] : f.terms()) {
    for (unsigned i = 0; i < t.rank(); ++i)
      f_legs[i] = (i >= offset && i < offset + f.rank()) ? cf.leg(i - offset) : HtsMonomial{};
    for (const auto& [ct, coef_t] : t.terms()) {
      for (unsigned i = 0; i < t.rank(); ++i) legs[i] = hts::multiply(ct.leg(i), f_legs[i]);
      add_product(out, legs, coef_t * coef_f);
    }
  }
  return out;
}

TensorElement coproduct(const HtsElement& h) {
  TensorElement out(2);
  for (const auto& [m, c] : h) {
    for (const auto& [pair, coef] : coproduct_plain(m.h)) {
      HtsMonomial l = pair.first, r = pair.second;
      l.alpha = m.alpha * l.alpha;
      r.beta = m.beta * r.beta;
      out.add(chain_from_legs({l, r}), c * coef);
    }
  }
  return out;
}

TensorElement apply_coproduct_leg(const TensorElement& t, unsigned i) {
  if (i < 1 || i > t.rank()) throw std::out_of_range("apply_coproduct_leg: leg index out of range");
  TensorElement out(t.rank() + 1);
  for (const auto& [c, coef] : t.terms()) {
    const auto legs = legs_of(c);
    const HtsMonomial& target = legs[i - 1];
    std::vector<HtsMonomial> expanded;
    expanded.reserve(legs.size() + 1);
    for (const auto& [pair, pc] : coproduct_plain(target.h)) {
      expanded.assign(legs.begin(), legs.begin() + (i - 1));
      HtsMonomial l = pair.first, r = pair.second;
      l.alpha = target.alpha * l.alpha;
      r.beta = target.beta * r.beta;
      expanded.push_back(std::move(l));
      expanded.push_back(std::move(r));
      expanded.insert(expanded.end(), legs.begin() + i, legs.end());
      out.add(chain_from_legs(expanded), coef * pc);
    }
  }
  return out;
}

TensorElement apply_counit_leg(const TensorElement& t, unsigned i) {
  if (i < 1 || i > t.rank()) throw std::out_of_range("apply_counit_leg: leg index out of range");
  TensorElement out(t.rank() - 1);
  for (const auto& [c, coef] : t.terms()) {
    if (!c.ops[i - 1].is_unit()) continue;
    Chain r;
    r.ops = c.ops;
    r.ops.erase(r.ops.begin() + (i - 1));
    r.slots = c.slots;
    r.slots[i - 1] = c.slots[i - 1] * c.slots[i];
    r.slots.erase(r.slots.begin() + i);
    out.add(r, coef);
  }
  return out;
}

TensorElement insert_unit_legs(const TensorElement& t, unsigned at, unsigned count) {
  if (at > t.rank()) throw std::out_of_range("insert_unit_legs: position out of range");
  TensorElement out(t.rank() + count);
  for (const auto& [c, coef] : t.terms()) {
    Chain r = c;
    r.ops.insert(r.ops.begin() + at, count, HsMonomial{});
    r.slots.insert(r.slots.begin() + at + 1, count, PMonomial{});
    out.add(r, coef);
  }
  return out;
}

HtsElement to_hts(const TensorElement& t) {
  if (t.rank() != 1) throw std::invalid_argument("to_hts: rank must be 1");
  HtsElement out;
  for (const auto& [c, coef] : t.terms()) out.add(c.leg(0), coef);
  return out;
}

TensorElement from_hts(const HtsElement& h) { return canonicalize({h}); }

PElement to_p(const TensorElement& t) {
  if (t.rank() != 0) throw std::invalid_argument("to_p: rank must be 0");
  PElement out;
  for (const auto& [c, coef] : t.terms()) out.add(c.slots.front(), coef);
  return out;
}

HsTensor2 specialize_zero(const TensorElement& t) {
  if (t.rank() != 2) throw std::invalid_argument("specialize_zero: rank must be 2");
  HsTensor2 out;
  for (const auto& [c, coef] : t.terms()) {
    bool trivial = true;
    for (const auto& s : c.slots) trivial = trivial && s.is_one();
    if (trivial) out.add({c.ops[0], c.ops[1]}, coef);
  }
  return out;
}

bool slot_is_trivial(const TensorElement& t, unsigned i) {
  for (const auto& [c, coef] : t.terms())
    if (!c.slots.at(i).is_one()) return false;
  return true;
}

}  // namespace tensor
}  // namespace rchopf
