#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rchopf/linear.hpp"

namespace rchopf {

/// PBW monomial delta_1^{e_1} delta_2^{e_2} ... X^x Y^y of H1.
struct H1Monomial {
  /// deltas[n-1] is the exponent of delta_n; no trailing zeros.
  std::vector<unsigned> deltas;
  unsigned x = 0;
  unsigned y = 0;

  H1Monomial() = default;
  H1Monomial(std::vector<unsigned> d, unsigned x_exp, unsigned y_exp);

  static H1Monomial delta(unsigned n, unsigned e = 1);

  [[nodiscard]] unsigned delta_exp(unsigned n) const {
    return n >= 1 && n <= deltas.size() ? deltas[n - 1] : 0;
  }
  /// Total delta degree with delta_n weighted n.
  [[nodiscard]] unsigned delta_weight() const;
  /// Eigenvalue of ad(Y).
  [[nodiscard]] unsigned weight() const { return delta_weight() + x; }
  [[nodiscard]] bool is_unit() const { return deltas.empty() && x == 0 && y == 0; }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const H1Monomial&, const H1Monomial&) = default;
  friend std::strong_ordering operator<=>(const H1Monomial& a, const H1Monomial& b);
};

using H1Element = Linear<H1Monomial>;
/// Tensor square of H1 over the scalars.
using H1Tensor2 = Linear<std::pair<H1Monomial, H1Monomial>>;

namespace h1 {

H1Element unit();
H1Element X();
H1Element Y();
H1Element delta(unsigned n);

H1Element multiply(const H1Element& a, const H1Element& b);
H1Element power(const H1Element& a, unsigned n);
H1Element commutator(const H1Element& a, const H1Element& b);

H1Tensor2 tensor(const H1Element& a, const H1Element& b);
H1Tensor2 tensor_multiply(const H1Tensor2& a, const H1Tensor2& b);

/// Algebra map determined by Delta Y, Delta delta_1 primitive and
/// Delta X = X(x)1 + 1(x)X + delta_1(x)Y.
H1Tensor2 coproduct(const H1Element& h);
Rational counit(const H1Element& h);
/// Anti-homomorphism with S(X) = -X + delta_1 Y, S(Y) = -Y, S(delta_1) = -delta_1.
H1Element antipode(const H1Element& h);

/// m(f (x) g) on a tensor square, for checking Hopf axioms.
H1Element multiply_legs(const H1Tensor2& t);
H1Tensor2 apply_legs(const H1Tensor2& t, H1Element (*left)(const H1Element&),
                     H1Element (*right)(const H1Element&));

}  // namespace h1
}  // namespace rchopf
