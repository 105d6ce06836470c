#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "rchopf/h1.hpp"
#include "rchopf/linear.hpp"

namespace rchopf {

/// Monomial Z_0^{e_0} Z_1^{e_1} ... in the jet algebra P.
struct PMonomial {
  /// exps[j] is the exponent of Z_j; no trailing zeros.
  std::vector<unsigned> exps;

  PMonomial() = default;
  explicit PMonomial(std::vector<unsigned> e);
  static PMonomial var(unsigned j, unsigned e = 1);

  [[nodiscard]] bool is_one() const { return exps.empty(); }
  [[nodiscard]] unsigned exp(unsigned j) const { return j < exps.size() ? exps[j] : 0; }
  /// Grading with wt(Z_j) = j + 2; the Y-eigenvalue.
  [[nodiscard]] unsigned weight() const;
  [[nodiscard]] unsigned degree() const;
  [[nodiscard]] std::string str() const;

  friend PMonomial operator*(const PMonomial& a, const PMonomial& b);
  friend bool operator==(const PMonomial&, const PMonomial&) = default;
  friend std::strong_ordering operator<=>(const PMonomial& a, const PMonomial& b);
};

using PElement = Linear<PMonomial>;

namespace jets {

PElement one();
PElement Z(unsigned j);
PElement multiply(const PElement& a, const PElement& b);

/// X(Z_j) = Z_{j+1} extended as a derivation.
PElement apply_x(const PElement& p);
/// Y(Z_j) = (j+2) Z_j extended as a derivation.
PElement apply_y(const PElement& p);
/// Action of H1 on P: X, Y derivations and delta_k(P) = 0.
PElement act(const H1Element& h, const PElement& p);

/// Homogeneous component of the given weight.
PElement homogeneous_part(const PElement& p, unsigned weight);

/// Algebra map P -> R determined by the images of Z_j. R needs a ring
/// structure with scaling by Rational; images are requested lazily.
template <class R, class Image>
R evaluate(const PElement& p, Image&& image, const R& one) {
  R total = one * Rational(0);
  std::vector<R> cache;
  for (const auto& [m, c] : p) {
    R term = one;
    for (unsigned j = 0; j < m.exps.size(); ++j) {
      if (m.exps[j] == 0) continue;
      while (cache.size() <= j) cache.push_back(image(static_cast<unsigned>(cache.size())));
      for (unsigned e = 0; e < m.exps[j]; ++e) term = term * cache[j];
    }
    total = total + term * c;
  }
  return total;
}

/// Substitutes rational values for the jets; Z_k = 0 for all k gives the constant term.
Rational evaluate_rational(const PElement& p, const std::function<Rational(unsigned)>& value);

}  // namespace jets
}  // namespace rchopf
