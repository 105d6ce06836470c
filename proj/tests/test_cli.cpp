#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "rchopf/cli.hpp"
#include "rchopf/document.hpp"
#include "rchopf/modforms.hpp"

using namespace rchopf;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_dir() {
  fs::path d = fs::temp_directory_path() / ("rchopf_cli_" + std::to_string(std::random_device{}()));
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("compute RC 1 reproduces the bundled fixture") {
  const Run r = run({"compute", "RC", "1"});
  CHECK(r.code == cli::kPass);
  const ExpressionDocument d = parse(r.out);
  const ExpressionDocument fixture = read_document(fs::path(cli::default_fixture_dir()) / "appendix_rc1.json");
  CHECK(d.content_hash() == fixture.content_hash());
  CHECK(run({"compute", "RC", "-n", "1"}).out == r.out);
}

TEST_CASE("compute B 2 and F 0") {
  const Run b = run({"compute", "B", "2"});
  REQUIRE(b.code == cli::kPass);
  const HtsElement b2 = to_hts_element(parse(b.out));
  CHECK(b2 == hts::multiply(hts::X(), hts::X()) - hts::multiply(hts::alpha(jets::Z(0)), hts::Y()));
  const Run f = run({"compute", "F", "0"});
  REQUIRE(f.code == cli::kPass);
  const RCBracketSet set = to_rc_set(parse(f.out));
  REQUIRE(set.elements.size() == 1);
  CHECK(set.elements[0] == TensorElement::unit(2));
}

TEST_CASE("compute writes files deterministically") {
  const fs::path dir = temp_dir();
  const std::string a = (dir / "a.json").string(), b = (dir / "b.json").string();
  CHECK(run({"compute", "A", "3", "--out", a}).code == cli::kPass);
  CHECK(run({"compute", "A", "3", "--out", b}).code == cli::kPass);
  CHECK(read_document(a).content_hash() == read_document(b).content_hash());
  CHECK(run({"compute", "A", "3", "--out", (dir / "missing" / "x.json").string()}).code == cli::kUsage);
  fs::remove_all(dir);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"compute"}).code == cli::kUsage);
  CHECK(run({"compute", "Q", "1"}).code == cli::kUsage);
  CHECK(run({"compute", "RC", "x"}).code == cli::kUsage);
  CHECK(run({"compute", "RC", "2", "-n", "3"}).code == cli::kUsage);
  CHECK(run({"compute", "RC", "99"}).code == cli::kUsage);
  CHECK(run({"verify", "nonsense"}).code == cli::kUsage);
  CHECK(run({"verify", "twist", "50"}).code == cli::kUsage);
  CHECK(run({"modforms", "bracket", "E4", "E99", "1"}).code == cli::kUsage);
  CHECK(run({"modforms", "star", "E4", "E6", "--kappa", "1/0"}).code == cli::kUsage);
  CHECK(run({"cache", "inspect"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kPass);
}

TEST_CASE("verify verbs") {
  const Run a = run({"verify", "appendix"});
  CHECK(a.code == cli::kPass);
  CHECK(a.out.find("appendix order=3 status=pass") != std::string::npos);
  CHECK(run({"verify", "lemma1", "10"}).code == cli::kPass);
  CHECK(run({"verify", "twist", "2"}).code == cli::kPass);
  CHECK(run({"verify", "counit", "3"}).code == cli::kPass);
  CHECK(run({"verify", "ode", "3"}).code == cli::kPass);
  CHECK(run({"verify", "pert", "3"}).code == cli::kPass);
  CHECK(run({"verify", "zero-omega", "3"}).code == cli::kPass);
  CHECK(run({"verify", "beta-free", "3"}).code == cli::kPass);
}

TEST_CASE("verification reports as files") {
  const fs::path dir = temp_dir();
  const std::string path = (dir / "report.json").string();
  CHECK(run({"verify", "lemma1", "-n", "4", "--out", path}).code == cli::kPass);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["passed"] == true);
  CHECK(j["reports"][0]["orders"].size() == 5);
  CHECK(j["reports"][0]["orders"][4]["status"] == "pass");
  fs::remove_all(dir);
}

TEST_CASE("a broken fixture fails the appendix check") {
  const fs::path dir = temp_dir();
  for (int n = 1; n <= 3; ++n) {
    const std::string name = "appendix_rc" + std::to_string(n) + ".json";
    fs::copy_file(fs::path(cli::default_fixture_dir()) / name, dir / name);
  }
  ExpressionDocument d = read_document(dir / "appendix_rc2.json");
  d.terms.erase(d.terms.begin());
  write_document(dir / "appendix_rc2.json", d);
  const Run r = run({"verify", "appendix", "--fixtures", dir.string()});
  CHECK(r.code == cli::kFail);
  CHECK(r.out.find("appendix order=2 status=fail") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("modforms verbs") {
  const Run b = run({"modforms", "bracket", "E4", "E6", "1"});
  REQUIRE(b.code == cli::kPass);
  std::istringstream in(b.out);
  const GradedForm f = modforms::read_form(in);
  CHECK(f.series == modforms::delta().series * Rational(-3456));
  const Run c = run({"modforms", "crosscheck", "1", "E4", "E6"});
  CHECK(c.code == cli::kPass);
  CHECK(c.out.find("status=pass") != std::string::npos);
  const Run s = run({"modforms", "star", "E4", "E6", "-n", "0", "--prec", "8"});
  REQUIRE(s.code == cli::kPass);
  std::istringstream sin(s.out);
  CHECK(modforms::read_form(sin).series == (modforms::eisenstein(4).series * modforms::eisenstein(6).series).truncated(8));
}

TEST_CASE("forms from files and sigma") {
  const fs::path dir = temp_dir();
  {
    std::ofstream out(dir / "e4.txt");
    modforms::write_form(out, modforms::eisenstein(4));
    std::ofstream bad(dir / "bad.txt");
    bad << "weight four\n";
  }
  CHECK(run({"modforms", "crosscheck", "1", (dir / "e4.txt").string(), "E6"}).code == cli::kPass);
  CHECK(run({"modforms", "bracket", (dir / "bad.txt").string(), "E6", "1"}).code == cli::kUsage);
  CHECK(run({"modforms", "crosscheck", "1", "E4", "E6", "--sigma", "E4"}).code == cli::kUsage);
  // the brackets do not depend on the choice of projective structure
  CHECK(run({"modforms", "crosscheck", "2", "E4", "E6", "--sigma", "E2"}).code == cli::kPass);
  fs::remove_all(dir);
}

TEST_CASE("cache verbs") {
  const fs::path dir = temp_dir();
  CHECK(run({"compute", "RC", "2", "--cache-dir", dir.string()}).code == cli::kPass);
  const Run i = run({"cache", "inspect", "--cache-dir", dir.string()});
  CHECK(i.code == cli::kPass);
  CHECK(i.out.find("RC_2") != std::string::npos);
  CHECK(run({"cache", "clear", "--cache-dir", dir.string()}).out == "removed 1\n");
  fs::remove_all(dir);
}
