#pragma once

#include <compare>
#include <string>
#include <utility>

#include "rchopf/h1.hpp"
#include "rchopf/linear.hpp"
#include "rchopf/ypoly.hpp"

namespace rchopf {

/// PBW monomial delta_1^d1 X^x Y^y; the basis shared by H_s and the
/// H_s-part of the extended algebra.
struct HsMonomial {
  unsigned d1 = 0;
  unsigned x = 0;
  unsigned y = 0;

  [[nodiscard]] unsigned weight() const { return d1 + x; }
  [[nodiscard]] bool is_unit() const { return d1 == 0 && x == 0 && y == 0; }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const HsMonomial&, const HsMonomial&) = default;
  friend std::strong_ordering operator<=>(const HsMonomial& a, const HsMonomial& b) {
    if (auto c = a.weight() <=> b.weight(); c != 0) return c;
    if (auto c = a.d1 <=> b.d1; c != 0) return c;
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

using HsElement = Linear<HsMonomial>;
/// Tensor square of H_s over the scalars.
using HsTensor2 = Linear<std::pair<HsMonomial, HsMonomial>>;

namespace hs {

HsElement unit();
HsElement X();
HsElement Y();
HsElement delta1();
/// Image of a Y-polynomial.
HsElement from_poly(const YPolynomial& p);

/// Product in the quotient by delta_2 - delta_1^2/2, where [X, delta_1^k] = k delta_1^{k+1}/2.
HsElement multiply(const HsElement& a, const HsElement& b);
HsElement power(const HsElement& a, unsigned n);

/// S(X) = -X + delta_1 Y.
HsElement antipode_x();

/// Quotient map H1 -> H_s: delta_n -> c_n delta_1^n, c_1 = 1, c_{n+1} = (n/2) c_n.
HsElement project(const H1Element& h);
Rational delta_projection_coefficient(unsigned n);

/// Normal-ordered closed form of S(X^n) = S(X)^n:
///   sum_k (-1)^{n-k} C(n,k) delta_1^k / 2^k X^{n-k} (2Y+n-k)_k.
HsElement antipode_power_closed(unsigned n);

HsTensor2 tensor(const HsElement& a, const HsElement& b);

/// RC_n for vanishing quadratic differential:
///   sum_k S(X)^k/k! (2Y+k)_{n-k} (x) X^{n-k}/(n-k)! (2Y+n-k)_k.
HsTensor2 rc_zero_omega(unsigned n);

}  // namespace hs
}  // namespace rchopf
