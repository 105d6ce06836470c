#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "rchopf/document.hpp"

using namespace rchopf;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir(const std::string& tag) {
  fs::path d = fs::temp_directory_path() / ("rchopf_" + tag + "_" + std::to_string(std::random_device{}()));
  fs::create_directories(d);
  return d;
}

HtsElement random_hts(std::mt19937_64& rng) {
  const std::vector<HtsElement> gens = {hts::X(), hts::Y(), hts::delta1(), hts::alpha(jets::Z(0)),
                                        hts::beta(jets::Z(1)), hts::antipode_x()};
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(0, 3), num(-7, 7), den(1, 6);
  HtsElement out;
  for (int t = 0; t < 3; ++t) {
    HtsElement m = hts::unit();
    for (int i = len(rng); i > 0; --i) m = hts::multiply(m, gens[pick(rng)]);
    out.add(m, Rational(num(rng), den(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("bundled appendix fixtures round-trip byte for byte") {
  for (int n = 1; n <= 3; ++n) {
    const fs::path p = fs::path(RCHOPF_FIXTURE_DIR) / ("appendix_rc" + std::to_string(n) + ".json");
    const std::string text = slurp(p);
    const ExpressionDocument doc = parse(text);
    CHECK(print(doc) == text);
    CHECK(parse(print(doc)) == doc);
    CHECK(to_tensor(doc) == rc::compute_RC(n));
    CHECK(make_document(rc::compute_RC(n)).content_hash() == doc.content_hash());
  }
}

TEST_CASE("frozen content hashes") {
  CHECK(make_document(rc::compute_RC(1)).content_hash() == "fnv1a64:bb7ce2670dd598db");
  CHECK(make_document(rc::compute_RC(2)).content_hash() == "fnv1a64:68168655c489d9f0");
  CHECK(make_document(rc::compute_RC(3)).content_hash() == "fnv1a64:c3520c2ba98ff9c8");
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("random documents round-trip") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 25; ++i) {
    const HtsElement a = random_hts(rng), b = random_hts(rng), c = random_hts(rng);
    const ExpressionDocument e = make_document(a);
    CHECK(to_hts_element(parse(print(e))) == a);
    const TensorElement t2 = tensor::canonicalize({a, b});
    CHECK(to_tensor(parse(print(make_document(t2)))) == t2);
    const TensorElement t3 = tensor::canonicalize({a, b, c});
    const ExpressionDocument d3 = make_document(t3);
    CHECK(d3.kind == DocumentKind::tensor3);
    CHECK(print(parse(print(d3))) == print(d3));
    CHECK(to_tensor(parse(print(d3))) == t3);
  }
  const HsElement h = hs::antipode_power_closed(4);
  CHECK(to_hs_element(parse(print(make_document(h)))) == h);
}

TEST_CASE("rc sets") {
  const RCBracketSet set = rc::build_twist(2);
  const ExpressionDocument d = make_document(set);
  CHECK(d.kind == DocumentKind::rc_set);
  const RCBracketSet back = to_rc_set(parse(print(d)));
  CHECK(back.max_order == 2);
  REQUIRE(back.elements.size() == 3);
  for (unsigned n = 0; n <= 2; ++n) CHECK(back.elements[n] == set.elements[n]);
}

TEST_CASE("malformed documents are rejected") {
  std::string text = print(make_document(rc::compute_RC(1)));
  std::string tampered = text;
  tampered.replace(tampered.find("\"-2\""), 4, "\"-3\"");
  CHECK_THROWS_AS(parse(tampered), DocumentError);
  CHECK_THROWS_AS(parse("{"), DocumentError);
  CHECK_THROWS_AS(parse(R"({"schema_version":"9","kind":"tensor2","terms":[]})"), DocumentError);
  CHECK_THROWS_AS(parse(R"({"schema_version":"1","kind":"tensor9","terms":[]})"), DocumentError);
  CHECK_THROWS_AS(parse(R"({"schema_version":"1","kind":"tensor2","terms":[{"chain":[{}],"coef":"1"}]})"),
                  DocumentError);
  CHECK_THROWS_AS(parse(R"({"schema_version":"1","kind":"hs_element","terms":[{"chain":[[0,1,0]],"coef":"1/0"}]})"),
                  DocumentError);
  // metadata is not hashed
  ExpressionDocument d = parse(text);
  const std::string h = d.content_hash();
  d.metadata["operation"] = "other";
  CHECK(d.content_hash() == h);
}

TEST_CASE("disk cache") {
  const fs::path dir = temp_dir("cache");
  DiskCache cache(dir);
  CHECK_FALSE(cache.load("RC_2").has_value());
  const TensorElement& rc2 = cache.rc(2);
  CHECK(rc2 == rc::compute_RC(2));
  REQUIRE(cache.load("RC_2").has_value());
  CHECK(to_tensor(*cache.load("RC_2")) == rc2);
  const auto entries = cache.inspect();
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].key == "RC_2");
  CHECK(entries[0].hash == "fnv1a64:68168655c489d9f0");
  // a corrupted entry is a miss and gets rewritten
  {
    std::ofstream out(cache.path_for("RC_2"), std::ios::trunc);
    out << "{\"broken\":";
  }
  CHECK_FALSE(cache.load("RC_2").has_value());
  CHECK(cache.inspect()[0].hash == "corrupt");
  CHECK(cache.rc(2) == rc2);
  CHECK(cache.load("RC_2").has_value());
  CHECK(cache.clear() == 1);
  CHECK(cache.inspect().empty());
  fs::remove_all(dir);

  ::setenv("RC_CACHE_DIR", dir.c_str(), 1);
  auto env = DiskCache::from_environment(std::nullopt);
  REQUIRE(env.has_value());
  CHECK(env->dir() == dir);
  CHECK(DiskCache::from_environment(std::string("/tmp/other"))->dir() == fs::path("/tmp/other"));
  ::unsetenv("RC_CACHE_DIR");
  CHECK_FALSE(DiskCache::from_environment(std::nullopt).has_value());
  fs::remove_all(dir);
}
