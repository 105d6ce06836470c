#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>

#include "rchopf/rational.hpp"

namespace rchopf {

/// Finite linear combination of monomials with exact rational coefficients.
///
/// Terms are held in a std::map so iteration follows the monomial order and
/// serialization is deterministic. Zero coefficients are never stored; the
/// empty combination is the canonical zero.
template <class Mono>
class Linear {
 public:
  using Map = std::map<Mono, Rational>;
  using const_iterator = typename Map::const_iterator;

  Linear() = default;
  explicit Linear(const Mono& m, Rational c = Rational(1)) { add(m, std::move(c)); }

  static Linear scalar(const Rational& c) { return Linear(Mono{}, c); }

  void add(const Mono& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const Linear& other, const Rational& scale = Rational(1)) {
    if (scale.is_zero()) return;
    for (const auto& [m, c] : other.terms_) add(m, scale.is_one() ? c : c * scale);
  }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const Map& terms() const { return terms_; }
  [[nodiscard]] const_iterator begin() const { return terms_.begin(); }
  [[nodiscard]] const_iterator end() const { return terms_.end(); }

  [[nodiscard]] Rational coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Linear& operator+=(const Linear& o) { add(o); return *this; }
  Linear& operator-=(const Linear& o) { add(o, Rational(-1)); return *this; }
  Linear& operator*=(const Rational& s) {
    if (s.is_zero()) { terms_.clear(); return *this; }
    for (auto& kv : terms_) kv.second *= s;
    return *this;
  }

  friend Linear operator+(Linear a, const Linear& b) { return a += b; }
  friend Linear operator-(Linear a, const Linear& b) { return a -= b; }
  friend Linear operator-(Linear a) { return a *= Rational(-1); }
  friend Linear operator*(Linear a, const Rational& s) { return a *= s; }
  friend Linear operator*(const Rational& s, Linear a) { return a *= s; }
  friend bool operator==(const Linear& a, const Linear& b) { return a.terms_ == b.terms_; }

  /// Applies a linear map given on monomials.
  template <class F>
  [[nodiscard]] auto map_linear(F&& f) const -> decltype(f(std::declval<const Mono&>())) {
    decltype(f(std::declval<const Mono&>())) out;
    for (const auto& [m, c] : terms_) out.add(f(m), c);
    return out;
  }

 private:
  Map terms_;
};

/// Bilinear extension of a monomial product.
template <class Mono, class Out, class F>
Out bilinear(const Linear<Mono>& a, const Linear<Mono>& b, F&& mono_product) {
  Out out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) out.add(mono_product(ma, mb), ca * cb);
  return out;
}

}  // namespace rchopf
