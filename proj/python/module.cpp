#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rchopf/cli.hpp"
#include "rchopf/document.hpp"
#include "rchopf/modforms.hpp"
#include "rchopf/rc.hpp"

namespace py = pybind11;
using namespace rchopf;

namespace {

std::vector<std::string> coefficients(const QSeries& s) {
  std::vector<std::string> out;
  for (const auto& c : s.coefficients()) out.push_back(c.str());
  return out;
}

GradedForm form(const std::string& name, unsigned prec) { return modforms::builtin(name, prec); }

py::dict report(const VerificationReport& r) {
  py::list orders;
  for (const auto& o : r.orders) {
    py::dict d;
    d["order"] = o.order;
    d["passed"] = o.pass;
    d["terms"] = o.terms;
    d["residual_terms"] = o.residual_terms;
    d["seconds"] = o.seconds;
    orders.append(d);
  }
  py::dict out;
  out["check"] = r.check;
  out["passed"] = r.passed();
  out["orders"] = orders;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Rankin-Cohen elements of the transverse Hopf algebra H1";

  py::register_exception<SingularDenominator>(m, "SingularDenominator", PyExc_ArithmeticError);
  py::register_exception<DocumentError>(m, "DocumentError", PyExc_ValueError);

  m.def("compute_rc", [](unsigned n) { return print(make_document(rc::compute_RC(n))); }, py::arg("n"),
        "RC_n as a canonical JSON document.");
  m.def("compute_a", [](unsigned n) { return print(make_document(rc::compute_A(n))); }, py::arg("n"));
  m.def("compute_b", [](unsigned n) { return print(make_document(rc::compute_B(n))); }, py::arg("n"));
  m.def("rc_terms", [](unsigned n) { return rc::compute_RC(n).size(); }, py::arg("n"));
  m.def("content_hash", [](const std::string& text) { return parse(text).content_hash(); }, py::arg("document"),
        "Validates a document and returns its content hash.");

  m.def("verify_twist", [](unsigned n) { return report(rc::verify_twist_identity(n)); }, py::arg("n"));
  m.def("verify_counit", [](unsigned n) { return report(rc::verify_counit_identity(n)); }, py::arg("n"));
  m.def("verify_lemma1", [](unsigned n) { return report(rc::verify_lemma1(n)); }, py::arg("n"));
  m.def("verify_zero_omega", [](unsigned n) { return report(rc::verify_zero_omega(n)); }, py::arg("n"));

  m.def(
      "twist_coefficient",
      [](unsigned n, const std::string& kappa, const std::string& x, const std::string& y) {
        return rc::twist_coefficient(n, Rational::parse(kappa), Rational::parse(x), Rational::parse(y)).str();
      },
      py::arg("n"), py::arg("kappa"), py::arg("x"), py::arg("y"), "Rational arguments and result as 'p/q' strings.");

  m.def(
      "eisenstein", [](unsigned k, unsigned prec) { return coefficients(modforms::eisenstein(k, prec).series); },
      py::arg("k"), py::arg("prec") = modforms::kDefaultPrec);
  m.def(
      "bracket",
      [](const std::string& f, const std::string& g, unsigned n, unsigned prec) {
        return coefficients(modforms::classical_bracket(form(f, prec), form(g, prec), n).series);
      },
      py::arg("f"), py::arg("g"), py::arg("n"), py::arg("prec") = modforms::kDefaultPrec,
      "Classical bracket of built-in forms (E2, E4, E6, Delta).");
  m.def(
      "rc_bracket",
      [](const std::string& f, const std::string& g, unsigned n, unsigned prec) {
        return coefficients(modforms::evaluate_bidiff(rc::compute_RC(n), form(f, prec), form(g, prec)).series);
      },
      py::arg("f"), py::arg("g"), py::arg("n"), py::arg("prec") = modforms::kDefaultPrec,
      "RC_n evaluated on built-in forms.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
