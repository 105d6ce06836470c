#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "rchopf/rational.hpp"

namespace rchopf {

/// Univariate polynomial in the grading generator Y with rational coefficients.
class YPolynomial {
 public:
  using Map = std::map<unsigned, Rational>;

  YPolynomial() = default;
  YPolynomial(const Rational& c) { set(0, c); }  // NOLINT(google-explicit-constructor)
  YPolynomial(int c) : YPolynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// c * Y^e
  static YPolynomial monomial(unsigned e, const Rational& c = Rational(1));
  /// The polynomial a*Y + b.
  static YPolynomial linear(const Rational& a, const Rational& b);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const;
  [[nodiscard]] Rational coeff(unsigned e) const;
  [[nodiscard]] Rational leading() const;
  [[nodiscard]] const Map& coefficients() const { return coeffs_; }

  [[nodiscard]] Rational evaluate(const Rational& y) const;
  /// p(Y + c)
  [[nodiscard]] YPolynomial shifted(const Rational& c) const;
  [[nodiscard]] YPolynomial monic() const;

  YPolynomial& operator+=(const YPolynomial& o);
  YPolynomial& operator-=(const YPolynomial& o);
  YPolynomial& operator*=(const YPolynomial& o);
  YPolynomial& operator*=(const Rational& s);

  friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
  friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
  friend YPolynomial operator*(YPolynomial a, const YPolynomial& b) { return a *= b; }
  friend YPolynomial operator*(YPolynomial a, const Rational& s) { return a *= s; }
  friend YPolynomial operator-(YPolynomial a) { return a *= Rational(-1); }
  friend bool operator==(const YPolynomial&, const YPolynomial&) = default;

  /// Euclidean division; throws std::domain_error on a zero divisor.
  static std::pair<YPolynomial, YPolynomial> divmod(const YPolynomial& a, const YPolynomial& b);
  /// Monic greatest common divisor (zero if both are zero).
  static YPolynomial gcd(YPolynomial a, YPolynomial b);

  [[nodiscard]] std::string str() const;

 private:
  void set(unsigned e, const Rational& c);
  Map coeffs_;
};

std::ostream& operator<<(std::ostream& os, const YPolynomial& p);

/// Rising factorial (2Y + shift)_k = (2Y+shift)(2Y+shift+1)...(2Y+shift+k-1).
YPolynomial pochhammer(const Rational& shift, unsigned k);

/// Quotient of Y-polynomials kept in lowest terms with a monic denominator.
class YRationalFunction {
 public:
  YRationalFunction() : num_(), den_(1) {}
  YRationalFunction(YPolynomial num) : num_(std::move(num)), den_(1) {}  // NOLINT
  YRationalFunction(YPolynomial num, YPolynomial den);

  [[nodiscard]] const YPolynomial& numerator() const { return num_; }
  [[nodiscard]] const YPolynomial& denominator() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

  /// r(Y + c); realizes r(Y)*X = X*r(Y+1) for weight-1 generators.
  [[nodiscard]] YRationalFunction shifted(const Rational& c) const;

  YRationalFunction& operator+=(const YRationalFunction& o);
  YRationalFunction& operator*=(const YRationalFunction& o);
  friend YRationalFunction operator+(YRationalFunction a, const YRationalFunction& b) { return a += b; }
  friend YRationalFunction operator*(YRationalFunction a, const YRationalFunction& b) { return a *= b; }
  friend bool operator==(const YRationalFunction&, const YRationalFunction&) = default;

 private:
  void reduce();
  YPolynomial num_;
  YPolynomial den_;
};

/// 1 / Gamma(2Y + n) relative to 1 / Gamma(2Y), i.e. 1 / (2Y)_n.
YRationalFunction inverse_gamma_ratio(unsigned n);

}  // namespace rchopf
