#include "rchopf/modforms.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rchopf/rc.hpp"

namespace rchopf {

QSeries QSeries::constant(const Rational& c, unsigned prec) {
  QSeries s(prec);
  if (prec > 0) s.coeffs_[0] = c;
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

QSeries QSeries::derivative() const {
  QSeries d(prec());
  for (unsigned i = 1; i < prec(); ++i) d.coeffs_[i] = coeffs_[i] * Rational(static_cast<long>(i));
  return d;
}

QSeries QSeries::truncated(unsigned p) const {
  QSeries s(std::min(p, prec()));
  for (unsigned i = 0; i < s.prec(); ++i) s.coeffs_[i] = coeffs_[i];
  return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries s(std::min(a.prec(), b.prec()));
  for (unsigned i = 0; i < s.prec(); ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  QSeries s(std::min(a.prec(), b.prec()));
  for (unsigned i = 0; i < s.prec(); ++i) s.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return s;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const unsigned p = std::min(a.prec(), b.prec());
  QSeries s(p);
  for (unsigned i = 0; i < p; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j < p; ++j) s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return s;
}

QSeries operator*(const QSeries& a, const Rational& c) {
  QSeries s = a;
  for (auto& x : s.coeffs_) x *= c;
  return s;
}

std::string QSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < prec(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[i];
    if (i > 0) os << "*q^" << i;
    first = false;
  }
  if (first) os << "0";
  os << " + O(q^" << prec() << ")";
  return os.str();
}

namespace modforms {

Rational divisor_sum(unsigned k, unsigned n) {
  Rational s(0);
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) s += pow(Rational(static_cast<long>(d)), k);
  return s;
}

GradedForm eisenstein(unsigned k, unsigned prec) {
  Rational factor;
  switch (k) {
    case 2: factor = Rational(-24); break;
    case 4: factor = Rational(240); break;
    case 6: factor = Rational(-504); break;
    default: throw std::invalid_argument("eisenstein: weight must be 2, 4 or 6");
  }
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, QSeries> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({k, prec});
  if (it == cache.end()) {
    QSeries s = QSeries::constant(Rational(1), prec);
    for (unsigned n = 1; n < prec; ++n) s.set(n, factor * divisor_sum(k - 1, n));
    it = cache.emplace(std::make_pair(k, prec), std::move(s)).first;
  }
  return {it->second, k};
}

GradedForm delta(unsigned prec) {
  const QSeries e4 = eisenstein(4, prec).series, e6 = eisenstein(6, prec).series;
  return {(e4 * e4 * e4 - e6 * e6) * Rational(1, 1728), 12};
}

GradedForm builtin(const std::string& name, unsigned prec) {
  if (name == "E2") return eisenstein(2, prec);
  if (name == "E4") return eisenstein(4, prec);
  if (name == "E6") return eisenstein(6, prec);
  if (name == "Delta") return delta(prec);
  throw std::invalid_argument("unknown form: " + name);
}

GradedForm multiply(const GradedForm& a, const GradedForm& b) {
  return {a.series * b.series, a.weight + b.weight};
}

GradedForm add(const GradedForm& a, const GradedForm& b) {
  if (a.series.is_zero()) return {b.series + a.series, b.weight};
  if (b.series.is_zero()) return {a.series + b.series, a.weight};
  if (a.weight != b.weight) throw std::invalid_argument("add: weights differ");
  return {a.series + b.series, a.weight};
}

GradedForm serre_x(const GradedForm& f, const QSeries* sigma) {
  const QSeries e2 = eisenstein(2, f.series.prec()).series;
  QSeries x = f.series.derivative() - e2 * f.series * Rational(static_cast<long>(f.weight), 12);
  if (sigma) x = x + *sigma * f.series * f.y_eigenvalue();
  return {x, f.weight + 2};
}

GradedForm omega(unsigned prec) {
  GradedForm e4 = eisenstein(4, prec);
  return {e4.series * Rational(1, 72), 4};
}

QSeries g2star(unsigned prec) { return eisenstein(2, prec).series * Rational(1, 6); }

GradedForm classical_bracket(const GradedForm& f, const GradedForm& g, unsigned n) {
  const unsigned k = f.weight, l = g.weight;
  std::vector<QSeries> df{f.series}, dg{g.series};
  for (unsigned i = 0; i < n; ++i) {
    df.push_back(df.back().derivative());
    dg.push_back(dg.back().derivative());
  }
  QSeries out(std::min(f.series.prec(), g.series.prec()));
  for (unsigned r = 0; r <= n; ++r) {
    const unsigned s = n - r;
    const Rational c = Rational(r % 2 == 0 ? 1 : -1) * binomial(n + k - 1, s) * binomial(n + l - 1, r);
    out = out + df[r] * dg[s] * c;
  }
  return {out, k + l + 2 * n};
}

namespace {

GradedForm omega_sigma(const QSeries* sigma, unsigned prec) {
  GradedForm w = omega(prec);
  if (!sigma) return w;
  const GradedForm s{sigma->truncated(prec), 2};
  return {w.series + serre_x(s).series + s.series * s.series * Rational(1, 2), 4};
}

}  // namespace

GradedForm rho_eval(const PElement& p, const QSeries* sigma, unsigned prec) {
  std::vector<GradedForm> images;
  GradedForm total{QSeries(prec), 0};
  for (const auto& [m, c] : p) {
    GradedForm term{QSeries::constant(Rational(1), prec), 0};
    for (unsigned j = 0; j < m.exps.size(); ++j) {
      if (m.exps[j] == 0) continue;
      while (images.size() <= j)
        images.push_back(images.empty() ? omega_sigma(sigma, prec) : serre_x(images.back(), sigma));
      for (unsigned e = 0; e < m.exps[j]; ++e) term = multiply(term, images[j]);
    }
    term.series = term.series * c;
    total = add(total, term);
  }
  return total;
}

namespace {

rc::ModuleHooks<GradedForm> form_hooks(const QSeries* sigma, unsigned prec) {
  rc::ModuleHooks<GradedForm> h;
  h.act = [sigma](const HsMonomial& m, const GradedForm& f) {
    if (m.d1 > 0) return GradedForm{QSeries(f.series.prec()), f.weight + 2 * m.weight()};
    GradedForm r{f.series * pow(f.y_eigenvalue(), m.y), f.weight};
    for (unsigned i = 0; i < m.x; ++i) r = serre_x(r, sigma);
    return r;
  };
  h.rho = [sigma, prec](const PMonomial& p) { return rho_eval(PElement(p), sigma, prec); };
  h.multiply = [](const GradedForm& a, const GradedForm& b) { return multiply(a, b); };
  h.scale = [](const GradedForm& a, const Rational& c) { return GradedForm{a.series * c, a.weight}; };
  h.add = [](const GradedForm& a, const GradedForm& b) { return add(a, b); };
  h.y_eigenvalue = [](const GradedForm& a) -> std::optional<Rational> { return a.y_eigenvalue(); };
  return h;
}

}  // namespace

GradedForm evaluate_bidiff(const TensorElement& t, const GradedForm& f, const GradedForm& g,
                           const QSeries* sigma) {
  const unsigned prec = std::min(f.series.prec(), g.series.prec());
  const GradedForm zero{QSeries(prec), 0};
  return rc::evaluate<GradedForm>(t, {f, g}, form_hooks(sigma, prec), zero);
}

CrosscheckResult crosscheck_rc(unsigned n, const GradedForm& f, const GradedForm& g) {
  CrosscheckResult r;
  r.abstract = evaluate_bidiff(rc::compute_RC(n), f, g);
  r.classical = classical_bracket(f, g, n);
  r.equal = r.abstract.series == r.classical.series;
  // Proportionality constant from the first nonzero classical coefficient.
  const QSeries& a = r.abstract.series;
  const QSeries& c = r.classical.series;
  for (unsigned i = 0; i < c.prec(); ++i) {
    if (c[i].is_zero()) continue;
    const Rational k = a[i] / c[i];
    if (a == c * k) r.constant = k;
    break;
  }
  if (!r.constant && c.is_zero() && a.is_zero()) r.constant = Rational(1);
  return r;
}

std::vector<GradedForm> star_product(const GradedForm& a, const GradedForm& b, unsigned N,
                                     const std::optional<Rational>& kappa) {
  const unsigned prec = std::min(a.series.prec(), b.series.prec());
  const GradedForm zero{QSeries(prec), 0};
  return rc::star_product<GradedForm>(a, b, N, kappa, form_hooks(nullptr, prec), zero);
}

std::vector<QSeries> star_associator(const GradedForm& a, const GradedForm& b, const GradedForm& c,
                                     unsigned N, const std::optional<Rational>& kappa) {
  const auto ab = star_product(a, b, N, kappa);
  const auto bc = star_product(b, c, N, kappa);
  const unsigned prec = std::min({a.series.prec(), b.series.prec(), c.series.prec()});
  std::vector<QSeries> out(N + 1, QSeries(prec));
  for (unsigned i = 0; i <= N; ++i) {
    const auto left = star_product(ab[i], c, N - i, kappa);
    const auto right = star_product(a, bc[i], N - i, kappa);
    for (unsigned j = 0; i + j <= N; ++j) out[i + j] = out[i + j] + left[j].series - right[j].series;
  }
  return out;
}

GradedForm read_form(std::istream& in) {
  std::string line;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos != std::string::npos && line[pos] != '#') return true;
    }
    return false;
  };
  if (!next_line()) throw std::invalid_argument("read_form: empty input");
  std::istringstream header(line);
  std::string w, p;
  long weight = -1, prec = -1;
  if (!(header >> w >> weight >> p >> prec) || w != "weight" || p != "prec" || weight < 0 || prec < 1)
    throw std::invalid_argument("read_form: expected 'weight <l> prec <p>'");
  QSeries s(static_cast<unsigned>(prec));
  while (next_line()) {
    std::istringstream row(line);
    long n = -1;
    std::string c, extra;
    if (!(row >> n >> c) || (row >> extra)) throw std::invalid_argument("read_form: malformed line: " + line);
    if (n < 0 || n >= prec) throw std::invalid_argument("read_form: index out of range: " + line);
    s.set(static_cast<unsigned>(n), Rational::parse(c));
  }
  return {s, static_cast<unsigned>(weight)};
}

void write_form(std::ostream& out, const GradedForm& f) {
  out << "weight " << f.weight << " prec " << f.series.prec() << "\n";
  for (unsigned i = 0; i < f.series.prec(); ++i) out << i << " " << f.series[i] << "\n";
}

}  // namespace modforms
}  // namespace rchopf
