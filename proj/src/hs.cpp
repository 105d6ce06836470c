#include "rchopf/hs.hpp"

#include <sstream>

namespace rchopf {

std::string HsMonomial::str() const {
  std::ostringstream os;
  const char* sep = "";
  if (d1 > 0) { os << "d1"; if (d1 > 1) os << "^" << d1; sep = " "; }
  if (x > 0) { os << sep << "X"; if (x > 1) os << "^" << x; sep = " "; }
  if (y > 0) { os << sep << "Y"; if (y > 1) os << "^" << y; sep = " "; }
  if (*sep == '\0') os << "1";
  return os.str();
}

namespace hs {
namespace {

HsElement left_x(const HsElement& h) {
  HsElement out;
  for (const auto& [m, c] : h) {
    out.add(HsMonomial{m.d1, m.x + 1, m.y}, c);
    if (m.d1 > 0) out.add(HsMonomial{m.d1 + 1, m.x, m.y}, c * Rational(static_cast<long>(m.d1), 2));
  }
  return out;
}

HsElement multiply_monomials(const HsMonomial& a, const HsMonomial& b) {
  HsElement cur;
  const Rational wt(static_cast<long>(b.weight()));
  for (unsigned i = 0; i <= a.y; ++i)
    cur.add(HsMonomial{b.d1, b.x, b.y + i}, binomial(a.y, i) * pow(wt, a.y - i));
  for (unsigned k = 0; k < a.x; ++k) cur = left_x(cur);
  if (a.d1 == 0) return cur;
  HsElement out;
  for (const auto& [m, c] : cur) out.add(HsMonomial{m.d1 + a.d1, m.x, m.y}, c);
  return out;
}

}  // namespace

HsElement unit() { return HsElement(HsMonomial{}); }
HsElement X() { return HsElement(HsMonomial{0, 1, 0}); }
HsElement Y() { return HsElement(HsMonomial{0, 0, 1}); }
HsElement delta1() { return HsElement(HsMonomial{1, 0, 0}); }

HsElement from_poly(const YPolynomial& p) {
  HsElement out;
  for (const auto& [e, c] : p.coefficients()) out.add(HsMonomial{0, 0, e}, c);
  return out;
}

HsElement multiply(const HsElement& a, const HsElement& b) {
  return bilinear<HsMonomial, HsElement>(a, b, multiply_monomials);
}

HsElement power(const HsElement& a, unsigned n) {
  HsElement r = unit();
  for (unsigned i = 0; i < n; ++i) r = multiply(r, a);
  return r;
}

HsElement antipode_x() { return -X() + HsElement(HsMonomial{1, 0, 1}); }

Rational delta_projection_coefficient(unsigned n) {
  Rational c(1);
  for (unsigned k = 1; k < n; ++k) c *= Rational(static_cast<long>(k), 2);
  return c;
}

HsElement project(const H1Element& h) {
  HsElement out;
  for (const auto& [m, c] : h) {
    Rational coef = c;
    unsigned d1 = 0;
    for (std::size_t i = 0; i < m.deltas.size(); ++i) {
      const auto n = static_cast<unsigned>(i + 1);
      coef *= pow(delta_projection_coefficient(n), m.deltas[i]);
      d1 += n * m.deltas[i];
    }
    // delta_1^d1 is central up to the X-Y part on its right: already normal ordered.
    out.add(HsMonomial{d1, m.x, m.y}, coef);
  }
  return out;
}

HsElement antipode_power_closed(unsigned n) {
  HsElement out;
  for (unsigned k = 0; k <= n; ++k) {
    const Rational sign((n - k) % 2 == 0 ? 1 : -1);
    const Rational coef = sign * binomial(n, k) / pow(Rational(2), k);
    const YPolynomial poch = pochhammer(Rational(static_cast<long>(n - k)), k);
    for (const auto& [e, c] : poch.coefficients()) out.add(HsMonomial{k, n - k, e}, coef * c);
  }
  return out;
}

HsTensor2 tensor(const HsElement& a, const HsElement& b) {
  HsTensor2 out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) out.add({ma, mb}, ca * cb);
  return out;
}

HsTensor2 rc_zero_omega(unsigned n) {
  HsTensor2 out;
  const HsElement sx = antipode_x();
  for (unsigned k = 0; k <= n; ++k) {
    const HsElement left =
        multiply(power(sx, k), from_poly(pochhammer(Rational(static_cast<long>(k)), n - k))) *
        (Rational(1) / factorial(k));
    const HsElement right =
        multiply(power(X(), n - k), from_poly(pochhammer(Rational(static_cast<long>(n - k)), k))) *
        (Rational(1) / factorial(n - k));
    out.add(tensor(left, right));
  }
  return out;
}

}  // namespace hs
}  // namespace rchopf
