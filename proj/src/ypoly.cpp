#include "rchopf/ypoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rchopf {

void YPolynomial::set(unsigned e, const Rational& c) {
  if (c.is_zero())
    coeffs_.erase(e);
  else
    coeffs_[e] = c;
}

YPolynomial YPolynomial::monomial(unsigned e, const Rational& c) {
  YPolynomial p;
  p.set(e, c);
  return p;
}

YPolynomial YPolynomial::linear(const Rational& a, const Rational& b) {
  YPolynomial p;
  p.set(1, a);
  p.set(0, b);
  return p;
}

int YPolynomial::degree() const {
  return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.rbegin()->first);
}

Rational YPolynomial::coeff(unsigned e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational YPolynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.rbegin()->second;
}

Rational YPolynomial::evaluate(const Rational& y) const {
  Rational acc(0);
  int prev = degree();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    for (int e = prev; e > static_cast<int>(it->first); --e) acc *= y;
    acc += it->second;
    prev = static_cast<int>(it->first);
  }
  for (int e = prev; e > 0; --e) acc *= y;
  return acc;
}

YPolynomial YPolynomial::shifted(const Rational& c) const {
  YPolynomial out;
  const YPolynomial step = linear(Rational(1), c);
  // Horner in (Y + c).
  int prev = degree();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    for (int e = prev; e > static_cast<int>(it->first); --e) out *= step;
    out += YPolynomial(it->second);
    prev = static_cast<int>(it->first);
  }
  for (int e = prev; e > 0; --e) out *= step;
  return out;
}

YPolynomial YPolynomial::monic() const {
  if (is_zero()) return *this;
  YPolynomial p = *this;
  p *= Rational(1) / leading();
  return p;
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& o) {
  for (const auto& [e, c] : o.coeffs_) set(e, coeff(e) + c);
  return *this;
}

YPolynomial& YPolynomial::operator-=(const YPolynomial& o) {
  for (const auto& [e, c] : o.coeffs_) set(e, coeff(e) - c);
  return *this;
}

YPolynomial& YPolynomial::operator*=(const YPolynomial& o) {
  YPolynomial out;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) out.set(e1 + e2, out.coeff(e1 + e2) + c1 * c2);
  *this = std::move(out);
  return *this;
}

YPolynomial& YPolynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& kv : coeffs_) kv.second *= s;
  return *this;
}

std::pair<YPolynomial, YPolynomial> YPolynomial::divmod(const YPolynomial& a, const YPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("YPolynomial: division by zero polynomial");
  YPolynomial q, r = a;
  const int db = b.degree();
  const Rational lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    const unsigned shift = static_cast<unsigned>(r.degree() - db);
    const Rational c = r.leading() / lb;
    q.set(shift, q.coeff(shift) + c);
    r -= b * monomial(shift, c);
  }
  return {q, r};
}

YPolynomial YPolynomial::gcd(YPolynomial a, YPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string YPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const Rational a = c.sign() < 0 ? -c : c;
    if (e == 0 || !a.is_one()) os << a;
    if (e > 0) os << (e == 0 || !a.is_one() ? "*" : "") << "Y";
    if (e > 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const YPolynomial& p) { return os << p.str(); }

YPolynomial pochhammer(const Rational& shift, unsigned k) {
  YPolynomial p(1);
  for (unsigned i = 0; i < k; ++i)
    p *= YPolynomial::linear(Rational(2), shift + Rational(static_cast<long>(i)));
  return p;
}

YRationalFunction::YRationalFunction(YPolynomial num, YPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("YRationalFunction: zero denominator");
  reduce();
}

void YRationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = YPolynomial(1);
    return;
  }
  const YPolynomial g = YPolynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = YPolynomial::divmod(num_, g).first;
    den_ = YPolynomial::divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  num_ *= Rational(1) / lead;
  den_ *= Rational(1) / lead;
}

YRationalFunction YRationalFunction::shifted(const Rational& c) const {
  return {num_.shifted(c), den_.shifted(c)};
}

YRationalFunction& YRationalFunction::operator+=(const YRationalFunction& o) {
  *this = YRationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

YRationalFunction& YRationalFunction::operator*=(const YRationalFunction& o) {
  *this = YRationalFunction(num_ * o.num_, den_ * o.den_);
  return *this;
}

YRationalFunction inverse_gamma_ratio(unsigned n) {
  return {YPolynomial(1), pochhammer(Rational(0), n)};
}

}  // namespace rchopf
