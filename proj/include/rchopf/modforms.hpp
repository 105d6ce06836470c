#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rchopf/jets.hpp"
#include "rchopf/rational.hpp"
#include "rchopf/tensor.hpp"

namespace rchopf {

/// Truncated q-expansion c_0 + c_1 q + ... + c_{prec-1} q^{prec-1}.
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(unsigned prec) : coeffs_(prec) {}
  explicit QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  static QSeries constant(const Rational& c, unsigned prec);

  [[nodiscard]] unsigned prec() const { return static_cast<unsigned>(coeffs_.size()); }
  [[nodiscard]] const Rational& operator[](unsigned i) const { return coeffs_.at(i); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  void set(unsigned i, const Rational& c) { coeffs_.at(i) = c; }
  [[nodiscard]] bool is_zero() const;

  /// q d/dq
  [[nodiscard]] QSeries derivative() const;
  [[nodiscard]] QSeries truncated(unsigned prec) const;

  // Binary operations truncate to the smaller precision.
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const Rational& s);
  friend QSeries operator-(const QSeries& a) { return a * Rational(-1); }
  friend bool operator==(const QSeries&, const QSeries&) = default;

  [[nodiscard]] std::string str() const;

 private:
  std::vector<Rational> coeffs_;
};

/// q-expansion with a weight; Y acts by weight/2.
struct GradedForm {
  QSeries series;
  unsigned weight = 0;

  [[nodiscard]] Rational y_eigenvalue() const { return Rational(static_cast<long>(weight), 2); }
  friend bool operator==(const GradedForm&, const GradedForm&) = default;
};

struct CrosscheckResult {
  bool equal = false;
  /// c with abstract = c * classical when the two are proportional.
  std::optional<Rational> constant;
  GradedForm abstract;
  GradedForm classical;
};

namespace modforms {

constexpr unsigned kDefaultPrec = 20;

/// sigma_k(n) by divisor enumeration.
Rational divisor_sum(unsigned k, unsigned n);
/// E_2, E_4, E_6 with constant term 1. Throws std::invalid_argument for other k.
GradedForm eisenstein(unsigned k, unsigned prec = kDefaultPrec);
/// Delta = (E_4^3 - E_6^2)/1728.
GradedForm delta(unsigned prec = kDefaultPrec);
/// E2, E4, E6 or Delta by name; throws std::invalid_argument otherwise.
GradedForm builtin(const std::string& name, unsigned prec = kDefaultPrec);

GradedForm multiply(const GradedForm& a, const GradedForm& b);
/// Sum of two forms of the same weight; a zero series adopts the other weight.
GradedForm add(const GradedForm& a, const GradedForm& b);

/// X(f) = q f' - (weight/12) E_2 f; with sigma, X_sigma(f) = X(f) + sigma (weight/2) f.
GradedForm serre_x(const GradedForm& f, const QSeries* sigma = nullptr);
/// omega = E_4/72.
GradedForm omega(unsigned prec = kDefaultPrec);
/// g_2^* = E_2/6.
QSeries g2star(unsigned prec = kDefaultPrec);

/// [f,g]_n = sum_{r+s=n} (-1)^r C(n+k-1,s) C(n+l-1,r) f^(r) g^(s), ' = q d/dq.
GradedForm classical_bracket(const GradedForm& f, const GradedForm& g, unsigned n);

/// rho_sigma(Z_k) = X_sigma^k(omega_sigma), omega_sigma = omega + X(sigma) + sigma^2/2.
GradedForm rho_eval(const PElement& p, const QSeries* sigma = nullptr, unsigned prec = kDefaultPrec);

/// Evaluates a rank-2 chain element on f (x) g with delta_1 acting as 0.
GradedForm evaluate_bidiff(const TensorElement& t, const GradedForm& f, const GradedForm& g,
                           const QSeries* sigma = nullptr);

/// evaluate_bidiff(RC_n, f, g) against classical_bracket(f, g, n).
CrosscheckResult crosscheck_rc(unsigned n, const GradedForm& f, const GradedForm& g);

/// Orders 0..N of a *_t b (kappa-twisted if given).
std::vector<GradedForm> star_product(const GradedForm& a, const GradedForm& b, unsigned N,
                                     const std::optional<Rational>& kappa = std::nullopt);
/// t^n coefficients of (a*b)*c - a*(b*c) for n <= N.
std::vector<QSeries> star_associator(const GradedForm& a, const GradedForm& b, const GradedForm& c,
                                     unsigned N, const std::optional<Rational>& kappa = std::nullopt);

/// "weight <l> prec <p>" followed by "n c_n" lines; missing coefficients are 0.
/// Throws std::invalid_argument on malformed input.
GradedForm read_form(std::istream& in);
void write_form(std::ostream& out, const GradedForm& f);

}  // namespace modforms
}  // namespace rchopf
