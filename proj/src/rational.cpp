#include "rchopf/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace rchopf {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) throw std::invalid_argument("Rational: empty string");
  s = s.substr(b, e - b + 1);
  if (s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && part[0] == '-') i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::size_t Rational::hash() const {
  const auto* num = value_.get_num_mpz_t();
  const auto* den = value_.get_den_mpz_t();
  std::size_t h = mpz_sgn(num) < 0 ? 0x9e3779b97f4a7c15ULL : 0;
  h ^= mpz_getlimbn(num, 0) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= mpz_getlimbn(den, 0) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& a, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= a;
  return r;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return Rational(mpq_class(c));
}

Rational binomial(const Rational& a, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) r *= a - Rational(static_cast<long>(i));
  return r / factorial(k);
}

}  // namespace rchopf
