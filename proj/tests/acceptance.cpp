// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>

#include "json.hpp"
#include "rchopf/document.hpp"
#include "rchopf/h1_axioms.hpp"
#include "rchopf/modforms.hpp"
#include "rchopf/rc.hpp"

using namespace rchopf;
namespace fs = std::filesystem;

namespace {

// Wall-clock budgets in seconds.
constexpr double kRC1Seconds = 1, kRC2Seconds = 10, kRC3Seconds = 60;
constexpr double kTwistSeconds = 1800, kTwistLowSeconds = 60;
constexpr double kLemma1Seconds = 10;
constexpr double kDefaultSeconds = 600;

constexpr unsigned kBracketPrec = 20;
constexpr unsigned kStarPrec = 16;

const fs::path kFixtures = RCHOPF_FIXTURE_DIR;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

void require_report(Outcome& o, const VerificationReport& r) {
  for (const auto& ord : r.orders)
    if (!ord.pass) o.fail(r.check + " order " + std::to_string(ord.order) + " residual_terms=" + std::to_string(ord.residual_terms));
}

Outcome appendix() {
  Outcome o;
  const double budget[] = {0, kRC1Seconds, kRC2Seconds, kRC3Seconds};
  for (unsigned n = 1; n <= 3; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const TensorElement& rc = rc::compute_RC(n);
    const double s = seconds_since(t0);
    const TensorElement expected = to_tensor(read_document(kFixtures / ("appendix_rc" + std::to_string(n) + ".json")));
    if (!(rc == expected)) o.fail("RC" + std::to_string(n) + " differs from fixture");
    if (s > budget[n]) o.fail("RC" + std::to_string(n) + " took " + fmt(s));
    o.note("RC" + std::to_string(n) + " " + std::to_string(rc.size()) + " terms " + fmt(s));
  }
  return o;
}

Outcome twist() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  require_report(o, rc::verify_twist_identity(2));
  const double low = seconds_since(t0);
  if (low > kTwistLowSeconds) o.fail("orders 0-2 took " + fmt(low));
  const VerificationReport r = rc::verify_twist_identity(4);
  require_report(o, r);
  const double all = seconds_since(t0);
  if (all > kTwistSeconds) o.fail("orders 0-4 took " + fmt(all));
  o.note("orders 0-2 " + fmt(low) + ", 0-4 " + fmt(all));
  return o;
}

Outcome counit() {
  Outcome o;
  require_report(o, rc::verify_counit_identity(5));
  return o;
}

Outcome lemma1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  require_report(o, rc::verify_lemma1(10));
  const double s = seconds_since(t0);
  if (s > kLemma1Seconds) o.fail("took " + fmt(s));
  o.note(fmt(s));
  return o;
}

Outcome zero_omega() {
  Outcome o;
  require_report(o, rc::verify_zero_omega(5));
  TensorElement m2 = rc::transverse_class();
  m2 *= Rational(-2);
  if (!(rc::compute_RC(1) == m2)) o.fail("RC1 != -2F");
  return o;
}

Outcome generating() {
  Outcome o;
  require_report(o, rc::verify_phi_ode(hts::X(), hts::alpha(jets::Z(0)), 6));
  require_report(o, rc::verify_phi_ode(hts::antipode_x(), hts::beta(jets::Z(0)), 6));
  require_report(o, rc::verify_perturbation_identity(6));
  return o;
}

Outcome beta_free() {
  Outcome o;
  for (unsigned n = 0; n <= 6; ++n)
    if (!rc::is_beta_free(rc::compute_A(n))) o.fail("A" + std::to_string(n) + " has beta terms");
  for (unsigned n = 0; n <= 5; ++n)
    if (!rc::rc_first_leg_beta_free(n)) o.fail("RC" + std::to_string(n) + " first leg has beta terms");
  return o;
}

Outcome crosscheck() {
  Outcome o;
  std::ifstream in(kFixtures / "bracket_constants.json");
  const auto frozen = nlohmann::json::parse(in);
  const GradedForm e4 = modforms::eisenstein(4, kBracketPrec), e6 = modforms::eisenstein(6, kBracketPrec),
                   d = modforms::delta(kBracketPrec);
  const std::vector<std::pair<std::string, std::pair<GradedForm, GradedForm>>> pairs = {
      {"(E4,E6)", {e4, e6}}, {"(E4,E4)", {e4, e4}}, {"(E6,Delta)", {e6, d}}};
  for (unsigned n = 0; n <= 3; ++n) {
    const Rational c = n <= 1 ? Rational(1) : Rational::parse(frozen["constants"][std::to_string(n)].get<std::string>());
    for (const auto& [name, fg] : pairs) {
      const CrosscheckResult r = modforms::crosscheck_rc(n, fg.first, fg.second);
      if (!(r.abstract.series == r.classical.series * c) || r.abstract.series.prec() != kBracketPrec)
        o.fail("n=" + std::to_string(n) + " " + name);
    }
  }
  if (!(modforms::classical_bracket(e4, e6, 1).series == d.series * Rational(-3456))) o.fail("[E4,E6]_1 != -3456 Delta");
  return o;
}

Outcome associativity() {
  Outcome o;
  const std::vector<GradedForm> forms = {modforms::eisenstein(4, kStarPrec), modforms::eisenstein(6, kStarPrec),
                                         modforms::delta(kStarPrec)};
  unsigned triples = 0;
  for (const auto& a : forms)
    for (const auto& b : forms)
      for (const auto& c : forms) {
        const auto assoc = modforms::star_associator(a, b, c, 4);
        for (unsigned n = 0; n < assoc.size(); ++n)
          if (!assoc[n].is_zero()) o.fail("t^" + std::to_string(n) + " weights " + std::to_string(a.weight) + "," +
                                          std::to_string(b.weight) + "," + std::to_string(c.weight));
        ++triples;
      }
  o.note(std::to_string(triples) + " triples");
  return o;
}

Outcome hopf_axioms() {
  Outcome o;
  const auto ms = h1::monomials_up_to(5);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (const auto& f : h1::hopf_axiom_failures(H1Element(ms[i]), H1Element(ms[(7 * i + 3) % ms.size()])))
      o.fail(f + " at " + ms[i].str());
  std::mt19937_64 rng(20240101);
  for (int i = 0; i < 200; ++i) {
    const H1Element a = h1::random_element(rng, 4, 4), b = h1::random_element(rng, 4, 4);
    for (const auto& f : h1::hopf_axiom_failures(a, b)) o.fail(f + " on random element " + std::to_string(i));
  }
  o.note(std::to_string(ms.size()) + " monomials, 200 random elements");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"appendix fixtures RC1-RC3", appendix},
      {"twist identity through t^4", twist},
      {"counit identity through t^5", counit},
      {"S(X^n) closed form, n <= 10", lemma1},
      {"zero quadratic differential, n <= 5; RC1 = -2F", zero_omega},
      {"Phi ODE and perturbation through order 6", generating},
      {"beta-freeness", beta_free},
      {"modular cross-check at prec 20", crosscheck},
      {"star-product associativity through t^4 at prec 16", associativity},
      {"Hopf axioms on H1", hopf_axioms},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t0);
    if (s > kDefaultSeconds) o.fail("exceeded " + fmt(kDefaultSeconds));
    all = all && o.pass;
    std::printf("criterion %zu: %s  %s [%s]%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                fmt(s).c_str(), o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
