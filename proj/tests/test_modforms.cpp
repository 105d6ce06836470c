#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rchopf/modforms.hpp"
#include "rchopf/rc.hpp"

using namespace rchopf;

namespace {

constexpr unsigned P = 20;

GradedForm E(unsigned k) { return modforms::eisenstein(k, P); }

long sigma_oracle(unsigned k, unsigned n) {
  long s = 0;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) {
      long p = 1;
      for (unsigned i = 0; i < k; ++i) p *= d;
      s += p;
    }
  return s;
}

}  // namespace

TEST_CASE("divisor sums and Eisenstein series") {
  for (unsigned n = 1; n < 30; ++n) {
    CHECK(modforms::divisor_sum(1, n) == Rational(sigma_oracle(1, n)));
    CHECK(modforms::divisor_sum(3, n) == Rational(sigma_oracle(3, n)));
  }
  CHECK(E(4).series[0] == Rational(1));
  CHECK(E(4).series[1] == Rational(240));
  CHECK(E(2).series[1] == Rational(-24));
  CHECK(E(6).series[2] == Rational(-504 * sigma_oracle(5, 2)));
  CHECK(E(4).weight == 4);
  CHECK_THROWS_AS(modforms::eisenstein(8, P), std::invalid_argument);
}

TEST_CASE("Delta is the tau series") {
  const long tau[] = {0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920};
  const GradedForm d = modforms::delta(P);
  CHECK(d.weight == 12);
  for (unsigned n = 0; n <= 10; ++n) CHECK(d.series[n] == Rational(tau[n]));
}

TEST_CASE("Ramanujan identities") {
  const QSeries e2 = E(2).series, e4 = E(4).series, e6 = E(6).series;
  CHECK(e2.derivative() == (e2 * e2 - e4) * Rational(1, 12));
  CHECK(e4.derivative() == (e2 * e4 - e6) * Rational(1, 3));
  CHECK(e6.derivative() == (e2 * e6 - e4 * e4) * Rational(1, 2));
}

TEST_CASE("Serre operator") {
  const GradedForm one{QSeries::constant(1, P), 0};
  CHECK(modforms::serre_x(one).series.is_zero());
  CHECK(modforms::serre_x(modforms::delta(P)).series.is_zero());
  const GradedForm x4 = modforms::serre_x(E(4));
  CHECK(x4.weight == 6);
  CHECK(x4.series == E(6).series * Rational(-1, 3));
  CHECK(modforms::serre_x(E(6)).series == (E(4).series * E(4).series) * Rational(-1, 2));
  // sigma adds sigma * (l/2) f
  const QSeries s = E(2).series;
  CHECK(modforms::serre_x(E(4), &s).series == x4.series + s * E(4).series * Rational(2));
}

TEST_CASE("omega and g2*") {
  CHECK(modforms::omega(P).series[0] == Rational(1, 72));
  CHECK(modforms::omega(P).weight == 4);
  const QSeries g = modforms::g2star(P);
  CHECK(g[0] == Rational(1, 6));
  CHECK((g.derivative() - g * g * Rational(1, 2) + modforms::omega(P).series).is_zero());
}

TEST_CASE("classical brackets") {
  CHECK(modforms::classical_bracket(E(4), E(6), 0).series == E(4).series * E(6).series);
  CHECK(modforms::classical_bracket(E(4), E(4), 1).series.is_zero());
  const GradedForm b = modforms::classical_bracket(E(4), E(6), 1);
  CHECK(b.weight == 12);
  CHECK(b.series == modforms::delta(P).series * Rational(-3456));
  // [f,g]_1 = k f g' - l f' g
  const QSeries f = E(6).series, g = modforms::delta(P).series;
  CHECK(modforms::classical_bracket(E(6), modforms::delta(P), 1).series ==
        f * g.derivative() * Rational(6) - f.derivative() * g * Rational(12));
}

TEST_CASE("jet evaluation") {
  CHECK(modforms::rho_eval(jets::Z(0), nullptr, P).series == E(4).series * Rational(1, 72));
  CHECK(modforms::rho_eval(jets::one(), nullptr, P).series == QSeries::constant(1, P));
  CHECK(modforms::rho_eval(jets::Z(1), nullptr, P).series == E(6).series * Rational(-1, 216));
  CHECK(modforms::rho_eval(jets::Z(1), nullptr, P).weight == 6);
}

TEST_CASE("bidifferential evaluation") {
  CHECK(modforms::evaluate_bidiff(TensorElement::unit(2), E(4), E(6)).series == E(4).series * E(6).series);
  const TensorElement yy = tensor::canonicalize({hts::Y(), hts::Y()});
  CHECK(modforms::evaluate_bidiff(yy, E(4), E(6)).series == E(4).series * E(6).series * Rational(6));
  const TensorElement d = tensor::canonicalize({hts::delta1(), hts::unit()});
  CHECK(modforms::evaluate_bidiff(d, E(4), E(6)).series.is_zero());
  for (unsigned n = 0; n <= 3; ++n)
    CHECK(modforms::evaluate_bidiff(rc::compute_RC(n), E(4), modforms::delta(P)).weight == 16 + 2 * n);
}

TEST_CASE("abstract brackets match classical ones") {
  std::ifstream in(std::string(RCHOPF_FIXTURE_DIR) + "/bracket_constants.json");
  REQUIRE(in);
  const auto frozen = nlohmann::json::parse(in);
  const std::vector<std::pair<GradedForm, GradedForm>> pairs = {
      {E(4), E(6)}, {E(4), E(4)}, {E(6), modforms::delta(P)}};
  for (unsigned n = 0; n <= 3; ++n) {
    const Rational c = Rational::parse(frozen["constants"][std::to_string(n)].get<std::string>());
    for (const auto& [f, g] : pairs) {
      const CrosscheckResult r = modforms::crosscheck_rc(n, f, g);
      CHECK(r.abstract.series == r.classical.series * c);
      if (n <= 1) CHECK(r.equal);
    }
  }
}

TEST_CASE("star products") {
  const auto plain = modforms::star_product(E(4), E(6), 3);
  REQUIRE(plain.size() == 4);
  CHECK(plain[0].series == E(4).series * E(6).series);
  CHECK(plain[1].series == modforms::evaluate_bidiff(rc::compute_RC(1), E(4), E(6)).series);
  const auto twisted = modforms::star_product(E(4), E(6), 3, Rational(3, 2));
  Rational p(1);
  for (unsigned n = 0; n <= 3; ++n) {
    CHECK(twisted[n].series == plain[n].series * p);
    p *= Rational(-1, 4);
  }
  for (const auto& q : modforms::star_associator(E(4), E(6), modforms::delta(16), 2)) CHECK(q.is_zero());
}

TEST_CASE("form files") {
  std::stringstream io;
  modforms::write_form(io, E(6));
  CHECK(modforms::read_form(io) == E(6));
  std::istringstream sparse("# comment\nweight 2 prec 3\n1 1/2\n");
  const GradedForm s = modforms::read_form(sparse);
  CHECK(s.series[1] == Rational(1, 2));
  CHECK(s.series[0].is_zero());
  std::istringstream bad("weight 2 prec 3\n5 1\n");
  CHECK_THROWS_AS(modforms::read_form(bad), std::invalid_argument);
  std::istringstream bad_header("wt 2\n");
  CHECK_THROWS_AS(modforms::read_form(bad_header), std::invalid_argument);
}
