#include "rchopf/jets.hpp"

#include <sstream>

namespace rchopf {

PMonomial::PMonomial(std::vector<unsigned> e) : exps(std::move(e)) {
  while (!exps.empty() && exps.back() == 0) exps.pop_back();
}

PMonomial PMonomial::var(unsigned j, unsigned e) {
  std::vector<unsigned> v(j + 1, 0);
  v[j] = e;
  return PMonomial(std::move(v));
}

unsigned PMonomial::weight() const {
  unsigned w = 0;
  for (std::size_t j = 0; j < exps.size(); ++j) w += static_cast<unsigned>(j + 2) * exps[j];
  return w;
}

unsigned PMonomial::degree() const {
  unsigned d = 0;
  for (auto e : exps) d += e;
  return d;
}

std::string PMonomial::str() const {
  if (exps.empty()) return "1";
  std::ostringstream os;
  const char* sep = "";
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if (exps[j] == 0) continue;
    os << sep << "Z" << j;
    if (exps[j] > 1) os << "^" << exps[j];
    sep = " ";
  }
  return os.str();
}

PMonomial operator*(const PMonomial& a, const PMonomial& b) {
  if (a.exps.empty()) return b;
  if (b.exps.empty()) return a;
  std::vector<unsigned> e(std::max(a.exps.size(), b.exps.size()), 0);
  for (std::size_t j = 0; j < a.exps.size(); ++j) e[j] += a.exps[j];
  for (std::size_t j = 0; j < b.exps.size(); ++j) e[j] += b.exps[j];
  PMonomial m;
  m.exps = std::move(e);
  return m;
}

std::strong_ordering operator<=>(const PMonomial& a, const PMonomial& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  return a.exps <=> b.exps;
}

namespace jets {

PElement one() { return PElement(PMonomial{}); }
PElement Z(unsigned j) { return PElement(PMonomial::var(j)); }

PElement multiply(const PElement& a, const PElement& b) {
  PElement out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) out.add(ma * mb, ca * cb);
  return out;
}

PElement apply_x(const PElement& p) {
  PElement out;
  for (const auto& [m, c] : p) {
    for (std::size_t j = 0; j < m.exps.size(); ++j) {
      if (m.exps[j] == 0) continue;
      auto e = m.exps;
      e[j] -= 1;
      if (e.size() == j + 1) e.push_back(0);
      e[j + 1] += 1;
      out.add(PMonomial(std::move(e)), c * Rational(static_cast<long>(m.exps[j])));
    }
  }
  return out;
}

PElement apply_y(const PElement& p) {
  PElement out;
  for (const auto& [m, c] : p) out.add(m, c * Rational(static_cast<long>(m.weight())));
  return out;
}

PElement act(const H1Element& h, const PElement& p) {
  PElement out;
  for (const auto& [m, c] : h) {
    if (!m.deltas.empty()) continue;
    PElement cur = p;
    for (unsigned i = 0; i < m.y; ++i) cur = apply_y(cur);
    for (unsigned i = 0; i < m.x; ++i) cur = apply_x(cur);
    out.add(cur, c);
  }
  return out;
}

PElement homogeneous_part(const PElement& p, unsigned weight) {
  PElement out;
  for (const auto& [m, c] : p)
    if (m.weight() == weight) out.add(m, c);
  return out;
}

Rational evaluate_rational(const PElement& p, const std::function<Rational(unsigned)>& value) {
  Rational total(0);
  for (const auto& [m, c] : p) {
    Rational term = c;
    for (unsigned j = 0; j < m.exps.size(); ++j)
      if (m.exps[j] > 0) term *= pow(value(j), m.exps[j]);
    total += term;
  }
  return total;
}

}  // namespace jets
}  // namespace rchopf
