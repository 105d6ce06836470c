#pragma once

#include <compare>
#include <string>

#include "rchopf/hs.hpp"
#include "rchopf/jets.hpp"
#include "rchopf/linear.hpp"

namespace rchopf {

/// Basis element alpha(P) beta(Q) delta_1^a X^k Y^m of the extended algebra
/// P x| H_s |x P, with delta_2 eliminated through
///   delta_2 = delta_1^2/2 + alpha(Z_0) - beta(Z_0).
struct HtsMonomial {
  PMonomial alpha;
  PMonomial beta;
  HsMonomial h;

  HtsMonomial() = default;
  HtsMonomial(PMonomial a, PMonomial b, HsMonomial hm)
      : alpha(std::move(a)), beta(std::move(b)), h(hm) {}
  explicit HtsMonomial(HsMonomial hm) : h(hm) {}

  /// Eigenvalue of ad(Y).
  [[nodiscard]] unsigned weight() const { return alpha.weight() + beta.weight() + h.weight(); }
  [[nodiscard]] bool is_unit() const { return alpha.is_one() && beta.is_one() && h.is_unit(); }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const HtsMonomial&, const HtsMonomial&) = default;
  friend std::strong_ordering operator<=>(const HtsMonomial& a, const HtsMonomial& b) {
    if (auto c = a.h <=> b.h; c != 0) return c;
    if (auto c = a.alpha <=> b.alpha; c != 0) return c;
    return a.beta <=> b.beta;
  }
};

using HtsElement = Linear<HtsMonomial>;

namespace hts {

HtsElement unit();
HtsElement X();
HtsElement Y();
HtsElement delta1();
/// delta_2 image: delta_1^2/2 + alpha(Z_0) - beta(Z_0).
HtsElement delta2();
/// S(X) = -X + delta_1 Y.
HtsElement antipode_x();
HtsElement alpha(const PElement& p);
HtsElement beta(const PElement& q);
HtsElement embed(const HsElement& h);
HtsElement from_poly(const YPolynomial& p);

HtsElement multiply(const HtsElement& a, const HtsElement& b);
HtsElement multiply(const HtsMonomial& a, const HtsMonomial& b);
HtsElement power(const HtsElement& a, unsigned n);
HtsElement commutator(const HtsElement& a, const HtsElement& b);
/// Right multiplication by a polynomial in Y (no reordering needed).
HtsElement right_multiply_poly(const HtsElement& a, const YPolynomial& p);

/// Image of an H1 element: delta_n is sent to its iterated-bracket image.
HtsElement from_h1(const H1Element& h);

/// epsilon(alpha(P) beta(Q) h) = P epsilon(h) Q.
PElement counit(const HtsElement& h);
/// S(alpha(P) beta(Q) h) = S(h) alpha(Q) beta(P).
HtsElement antipode(const HtsElement& h);

/// True when h is homogeneous of Y-weight w, i.e. [Y, h] = w h.
bool has_weight(const HtsElement& h, long w);

/// Sets every jet Z_k to zero and drops the alpha/beta parts.
HsElement specialize_zero(const HtsElement& h);

/// Number of cached monomial products (diagnostics).
std::size_t product_cache_size();

}  // namespace hts
}  // namespace rchopf
