#include "rchopf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rchopf/document.hpp"
#include "rchopf/modforms.hpp"
#include "rchopf/rc.hpp"

#ifndef RCHOPF_FIXTURE_DIR
#define RCHOPF_FIXTURE_DIR "fixtures"
#endif

namespace rchopf::cli {

std::string default_fixture_dir() { return RCHOPF_FIXTURE_DIR; }

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<unsigned> order;
  unsigned prec = modforms::kDefaultPrec;
  std::optional<std::string> kappa;
  std::optional<std::string> sigma;
  std::optional<std::string> out;
  std::optional<std::string> cache_dir;
  std::string fixtures = default_fixture_dir();
};

// Largest order accepted per verb; beyond these the term counts make runs impractical.
constexpr unsigned kMaxComputeOrder = 8;
constexpr unsigned kMaxTwistOrder = 7;
constexpr unsigned kMaxVerifyOrder = 12;
constexpr unsigned kMaxLemma1Order = 40;

unsigned parse_order(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6)
    throw UsageError("invalid order: " + s);
  return static_cast<unsigned>(std::stoul(s));
}

// Positional order wins over -n when both are given and agree; conflicts are usage errors.
unsigned resolve_order(const Options& o, const std::vector<std::string>& positional, std::size_t index,
                       unsigned fallback) {
  std::optional<unsigned> pos;
  if (positional.size() > index) pos = parse_order(positional[index]);
  if (pos && o.order && *pos != *o.order) throw UsageError("conflicting orders");
  if (pos) return *pos;
  if (o.order) return *o.order;
  return fallback;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (!o.out) {
    out << text;
    return;
  }
  std::ofstream f(*o.out, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write " + *o.out);
  f << text;
  if (!f) throw UsageError("write failed: " + *o.out);
}

std::optional<DiskCache> cache_of(const Options& o) { return DiskCache::from_environment(o.cache_dir); }

const TensorElement& rc_element(const Options& o, unsigned n) {
  if (auto cache = cache_of(o)) return cache->rc(n);
  return rc::compute_RC(n);
}

json report_json(const VerificationReport& r) {
  json orders = json::array();
  for (const auto& o : r.orders) {
    json j = {{"order", o.order},
              {"status", o.pass ? "pass" : "fail"},
              {"terms", o.terms},
              {"residual_terms", o.residual_terms},
              {"seconds", o.seconds}};
    if (!o.note.empty()) j["note"] = o.note;
    if (o.residual_tensor) j["residual"] = json::parse(print(make_document(*o.residual_tensor)));
    if (o.residual_element) j["residual"] = json::parse(print(make_document(*o.residual_element)));
    orders.push_back(std::move(j));
  }
  return {{"check", r.check}, {"passed", r.passed()}, {"orders", orders}};
}

int cmd_compute(const Options& o, const std::vector<std::string>& pos, std::ostream& out) {
  if (pos.empty()) throw UsageError("compute: expected kind A, B, RC or F");
  const std::string& kind = pos[0];
  if (pos.size() > 2) throw UsageError("compute: too many arguments");
  const unsigned n = resolve_order(o, pos, 1, 1);
  if (n > kMaxComputeOrder) throw UsageError("compute: order above limit " + std::to_string(kMaxComputeOrder));
  ExpressionDocument doc;
  if (kind == "A") doc = make_document(rc::compute_A(n));
  else if (kind == "B") doc = make_document(rc::compute_B(n));
  else if (kind == "RC") doc = make_document(rc_element(o, n));
  else if (kind == "F") {
    RCBracketSet set;
    set.max_order = n;
    for (unsigned k = 0; k <= n; ++k) set.elements.push_back(rc_element(o, k));
    doc = make_document(set);
  } else {
    throw UsageError("compute: unknown kind " + kind);
  }
  doc.metadata["operation"] = kind;
  doc.metadata["order"] = n;
  emit(o, print(doc), out);
  return kPass;
}

VerificationReport verify_appendix(const Options& o) {
  VerificationReport report{"appendix", {}};
  for (unsigned n = 1; n <= 3; ++n) {
    OrderResult r;
    r.order = n;
    const auto path = std::filesystem::path(o.fixtures) / ("appendix_rc" + std::to_string(n) + ".json");
    try {
      const TensorElement expected = to_tensor(read_document(path));
      const TensorElement& computed = rc_element(o, n);
      const TensorElement diff = computed - expected;
      r.terms = computed.size();
      r.residual_terms = diff.size();
      r.pass = diff.is_zero();
      if (!r.pass) r.residual_tensor = diff;
    } catch (const DocumentError& e) {
      r.pass = false;
      r.note = std::string("fixture-error:") + e.what();
      std::replace(r.note.begin(), r.note.end(), ' ', '_');
    }
    report.orders.push_back(std::move(r));
  }
  return report;
}

int cmd_verify(const Options& o, const std::vector<std::string>& pos, std::ostream& out) {
  if (pos.empty()) throw UsageError("verify: expected a check name");
  if (pos.size() > 2) throw UsageError("verify: too many arguments");
  const std::string& check = pos[0];
  std::vector<VerificationReport> reports;
  auto order = [&](unsigned fallback, unsigned limit) {
    const unsigned n = resolve_order(o, pos, 1, fallback);
    if (n > limit) throw UsageError("verify " + check + ": order above limit " + std::to_string(limit));
    return n;
  };
  if (check == "lemma1") {
    reports.push_back(rc::verify_lemma1(order(10, kMaxLemma1Order)));
  } else if (check == "ode") {
    const unsigned n = order(6, kMaxVerifyOrder);
    auto a = rc::verify_phi_ode(hts::X(), hts::alpha(jets::Z(0)), n);
    a.check = "ode[X,alpha(Z0)]";
    auto b = rc::verify_phi_ode(hts::antipode_x(), hts::beta(jets::Z(0)), n);
    b.check = "ode[S(X),beta(Z0)]";
    reports.push_back(std::move(a));
    reports.push_back(std::move(b));
  } else if (check == "pert") {
    reports.push_back(rc::verify_perturbation_identity(order(6, kMaxVerifyOrder)));
  } else if (check == "twist") {
    const unsigned n = order(4, kMaxTwistOrder);
    for (unsigned k = 0; k <= n; ++k) rc_element(o, k);
    reports.push_back(rc::verify_twist_identity(n));
  } else if (check == "counit") {
    const unsigned n = order(5, kMaxComputeOrder);
    for (unsigned k = 0; k <= n; ++k) rc_element(o, k);
    reports.push_back(rc::verify_counit_identity(n));
  } else if (check == "appendix") {
    reports.push_back(verify_appendix(o));
  } else if (check == "zero-omega") {
    const unsigned n = order(5, kMaxComputeOrder);
    for (unsigned k = 0; k <= n; ++k) rc_element(o, k);
    reports.push_back(rc::verify_zero_omega(n));
  } else if (check == "beta-free") {
    reports.push_back(rc::verify_beta_free(order(6, kMaxVerifyOrder)));
  } else {
    throw UsageError("verify: unknown check " + check);
  }
  bool pass = true;
  json all = json::array();
  for (const auto& r : reports) {
    out << r.str();
    pass = pass && r.passed();
    all.push_back(report_json(r));
  }
  out << "verify " << check << ": " << (pass ? "PASS" : "FAIL") << "\n";
  if (o.out) {
    std::ofstream f(*o.out, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write " + *o.out);
    f << json{{"passed", pass}, {"reports", all}}.dump(2) << "\n";
  }
  return pass ? kPass : kFail;
}

GradedForm resolve_form(const std::string& name, unsigned prec) {
  try {
    return modforms::builtin(name, prec);
  } catch (const std::invalid_argument&) {
  }
  std::ifstream in(name);
  if (!in) throw UsageError("unknown form (not E2, E4, E6, Delta or a readable file): " + name);
  try {
    GradedForm f = modforms::read_form(in);
    f.series = f.series.truncated(prec);
    return f;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed form file ") + name + ": " + e.what());
  }
}

std::optional<QSeries> resolve_sigma(const Options& o) {
  if (!o.sigma) return std::nullopt;
  const GradedForm s = resolve_form(*o.sigma, o.prec);
  if (s.weight != 2) throw UsageError("--sigma must have weight 2");
  return s.series;
}

std::optional<Rational> resolve_kappa(const Options& o) {
  if (!o.kappa) return std::nullopt;
  try {
    return Rational::parse(*o.kappa);
  } catch (const std::invalid_argument&) {
    throw UsageError("invalid --kappa: " + *o.kappa);
  }
}

int cmd_modforms(const Options& o, const std::vector<std::string>& pos, std::ostream& out) {
  if (pos.empty()) throw UsageError("modforms: expected bracket, crosscheck or star");
  const std::string& sub = pos[0];
  if (o.prec < 1) throw UsageError("--prec must be positive");
  std::ostringstream text;
  if (sub == "bracket") {
    if (pos.size() < 3 || pos.size() > 4) throw UsageError("modforms bracket F G [n]");
    const unsigned n = resolve_order(o, pos, 3, 1);
    const GradedForm b = modforms::classical_bracket(resolve_form(pos[1], o.prec), resolve_form(pos[2], o.prec), n);
    modforms::write_form(text, b);
    emit(o, text.str(), out);
    return kPass;
  }
  if (sub == "crosscheck") {
    // crosscheck n F G, or crosscheck F G with -n
    std::vector<std::string> rest(pos.begin() + 1, pos.end());
    std::optional<std::string> n_text;
    if (rest.size() == 3) {
      n_text = rest[0];
      rest.erase(rest.begin());
    }
    if (rest.size() != 2) throw UsageError("modforms crosscheck [n] F G");
    unsigned n = n_text ? parse_order(*n_text) : (o.order ? *o.order : 1);
    if (n_text && o.order && *o.order != n) throw UsageError("conflicting orders");
    if (n > kMaxComputeOrder) throw UsageError("crosscheck: order above limit");
    const GradedForm f = resolve_form(rest[0], o.prec), g = resolve_form(rest[1], o.prec);
    const auto sigma = resolve_sigma(o);
    CrosscheckResult r;
    if (sigma) {
      r.abstract = modforms::evaluate_bidiff(rc_element(o, n), f, g, &*sigma);
      r.classical = modforms::classical_bracket(f, g, n);
      r.equal = r.abstract.series == r.classical.series;
    } else {
      rc_element(o, n);
      r = modforms::crosscheck_rc(n, f, g);
    }
    text << "crosscheck n=" << n << " f=" << rest[0] << " g=" << rest[1] << " prec=" << o.prec
         << " status=" << (r.equal ? "pass" : "fail");
    if (r.constant) text << " constant=" << *r.constant;
    text << "\n";
    emit(o, text.str(), out);
    return r.equal ? kPass : kFail;
  }
  if (sub == "star") {
    if (pos.size() != 3) throw UsageError("modforms star F G [-n N] [--kappa p/q]");
    const unsigned N = o.order.value_or(2);
    if (N > kMaxComputeOrder) throw UsageError("star: order above limit");
    for (unsigned k = 0; k <= N; ++k) rc_element(o, k);
    std::vector<GradedForm> terms;
    try {
      terms = modforms::star_product(resolve_form(pos[1], o.prec), resolve_form(pos[2], o.prec), N,
                                     resolve_kappa(o));
    } catch (const SingularDenominator& e) {
      throw UsageError(e.what());
    }
    for (unsigned k = 0; k < terms.size(); ++k) {
      text << "# order " << k << "\n";
      modforms::write_form(text, terms[k]);
    }
    emit(o, text.str(), out);
    return kPass;
  }
  throw UsageError("modforms: unknown subcommand " + sub);
}

int cmd_cache(const Options& o, const std::vector<std::string>& pos, std::ostream& out) {
  if (pos.size() != 1) throw UsageError("cache inspect|clear");
  const auto cache = cache_of(o);
  if (!cache) throw UsageError("cache: no --cache-dir and RC_CACHE_DIR is unset");
  if (pos[0] == "inspect") {
    out << "cache " << cache->dir().string() << "\n";
    for (const auto& e : cache->inspect()) out << e.key << " bytes=" << e.bytes << " hash=" << e.hash << "\n";
    return kPass;
  }
  if (pos[0] == "clear") {
    out << "removed " << cache->clear() << "\n";
    return kPass;
  }
  throw UsageError("cache: unknown action " + pos[0]);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Rankin-Cohen / Hopf algebra engine"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::vector<std::string> pos;
  app.add_option("-n,--order", o.order, "order n or N");
  app.add_option("--prec", o.prec, "q-expansion precision");
  app.add_option("--kappa", o.kappa, "twisting parameter p/q");
  app.add_option("--sigma", o.sigma, "weight-2 q-series file (or builtin name) for the sigma-conjugate action");
  app.add_option("--out", o.out, "output path");
  app.add_option("--cache-dir", o.cache_dir, "document cache directory (default $RC_CACHE_DIR)");
  app.add_option("--fixtures", o.fixtures, "fixture directory");
  auto* compute = app.add_subcommand("compute", "compute A|B|RC|F [n]");
  auto* verify = app.add_subcommand("verify", "verify lemma1|ode|pert|twist|counit|appendix|zero-omega|beta-free [n]");
  auto* mf = app.add_subcommand("modforms", "modforms bracket|crosscheck|star ...");
  auto* cache = app.add_subcommand("cache", "cache inspect|clear");
  for (auto* sub : {compute, verify, mf, cache}) sub->add_option("args", pos)->allow_extra_args();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(o, pos, out);
    if (verify->parsed()) return cmd_verify(o, pos, out);
    if (mf->parsed()) return cmd_modforms(o, pos, out);
    if (cache->parsed()) return cmd_cache(o, pos, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

}  // namespace rchopf::cli
