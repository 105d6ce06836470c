#include "rchopf/document.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace rchopf {

using nlohmann::json;

std::string to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::hs_element: return "hs_element";
    case DocumentKind::hts_element: return "hts_element";
    case DocumentKind::tensor2: return "tensor2";
    case DocumentKind::tensor3: return "tensor3";
    case DocumentKind::rc_set: return "rc_set";
  }
  return "";
}

DocumentKind parse_kind(const std::string& s) {
  for (auto k : {DocumentKind::hs_element, DocumentKind::hts_element, DocumentKind::tensor2,
                 DocumentKind::tensor3, DocumentKind::rc_set})
    if (to_string(k) == s) return k;
  throw DocumentError("unknown document kind: " + s);
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string ExpressionDocument::content_hash() const {
  const json payload = {{"kind", to_string(kind)}, {"terms", terms}};
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(payload.dump())));
  return std::string("fnv1a64:") + buf;
}

namespace {

json jets_json(const PMonomial& p) {
  json o = json::object();
  for (unsigned j = 0; j < p.exps.size(); ++j)
    if (p.exps[j] > 0) o["Z" + std::to_string(j)] = p.exps[j];
  return o;
}

json op_json(const HsMonomial& m) { return json::array({m.d1, m.x, m.y}); }

unsigned as_unsigned(const json& v, const char* what) {
  if (!v.is_number_unsigned()) throw DocumentError(std::string("expected non-negative integer for ") + what);
  return v.get<unsigned>();
}

PMonomial jets_from(const json& o) {
  if (!o.is_object()) throw DocumentError("jet slot must be an object");
  std::vector<unsigned> exps;
  for (const auto& [key, value] : o.items()) {
    if (key.size() < 2 || key[0] != 'Z' || key.find_first_not_of("0123456789", 1) != std::string::npos)
      throw DocumentError("bad jet variable: " + key);
    const unsigned j = static_cast<unsigned>(std::stoul(key.substr(1)));
    const unsigned e = as_unsigned(value, "jet exponent");
    if (e == 0) throw DocumentError("zero jet exponent");
    if (exps.size() <= j) exps.resize(j + 1, 0);
    exps[j] = e;
  }
  return PMonomial(std::move(exps));
}

HsMonomial op_from(const json& a) {
  if (!a.is_array() || a.size() != 3) throw DocumentError("operator slot must be [d1, x, y]");
  return {as_unsigned(a[0], "d1"), as_unsigned(a[1], "x"), as_unsigned(a[2], "y")};
}

Rational coef_from(const json& t) {
  if (!t.contains("coef") || !t["coef"].is_string()) throw DocumentError("term without coef string");
  Rational c;
  try {
    c = Rational::parse(t["coef"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(std::string("bad coefficient: ") + e.what());
  }
  if (c.is_zero()) throw DocumentError("zero coefficient");
  return c;
}

const json& chain_of(const json& t, std::size_t expected) {
  if (!t.contains("chain") || !t["chain"].is_array() || t["chain"].size() != expected)
    throw DocumentError("chain has wrong length");
  return t["chain"];
}

json chain_json(const Chain& c) {
  json chain = json::array();
  for (unsigned i = 0; i < c.rank(); ++i) {
    chain.push_back(jets_json(c.slots[i]));
    chain.push_back(op_json(c.ops[i]));
  }
  chain.push_back(jets_json(c.slots.back()));
  return chain;
}

Chain chain_from(const json& chain, unsigned rank) {
  Chain c;
  for (unsigned i = 0; i < rank; ++i) {
    c.slots.push_back(jets_from(chain[2 * i]));
    c.ops.push_back(op_from(chain[2 * i + 1]));
  }
  c.slots.push_back(jets_from(chain[2 * rank]));
  return c;
}

json tensor_terms(const TensorElement& t) {
  json terms = json::array();
  for (const auto& [c, coef] : t.terms()) terms.push_back({{"coef", coef.str()}, {"chain", chain_json(c)}});
  return terms;
}

TensorElement tensor_from_terms(const json& terms, unsigned rank) {
  TensorElement t(rank);
  for (const auto& term : terms) t.add(chain_from(chain_of(term, 2 * rank + 1), rank), coef_from(term));
  return t;
}

unsigned rank_of(DocumentKind k) {
  if (k == DocumentKind::tensor2) return 2;
  if (k == DocumentKind::tensor3) return 3;
  throw DocumentError("document is not a tensor");
}

void expect_kind(const ExpressionDocument& doc, DocumentKind k) {
  if (doc.kind != k) throw DocumentError("expected " + to_string(k) + ", got " + to_string(doc.kind));
}

// Re-derives the canonical terms of a document from its element.
json canonical_terms(const ExpressionDocument& doc) {
  switch (doc.kind) {
    case DocumentKind::hs_element: return make_document(to_hs_element(doc)).terms;
    case DocumentKind::hts_element: return make_document(to_hts_element(doc)).terms;
    case DocumentKind::tensor2:
    case DocumentKind::tensor3: return make_document(to_tensor(doc)).terms;
    case DocumentKind::rc_set: return make_document(to_rc_set(doc)).terms;
  }
  return json::array();
}

}  // namespace

ExpressionDocument make_document(const HsElement& h) {
  ExpressionDocument d;
  d.kind = DocumentKind::hs_element;
  for (const auto& [m, c] : h) d.terms.push_back({{"coef", c.str()}, {"chain", json::array({op_json(m)})}});
  return d;
}

ExpressionDocument make_document(const HtsElement& h) {
  ExpressionDocument d;
  d.kind = DocumentKind::hts_element;
  for (const auto& [m, c] : h)
    d.terms.push_back({{"coef", c.str()},
                       {"chain", json::array({jets_json(m.alpha), op_json(m.h), jets_json(m.beta)})}});
  return d;
}

ExpressionDocument make_document(const TensorElement& t) {
  ExpressionDocument d;
  if (t.rank() == 2) d.kind = DocumentKind::tensor2;
  else if (t.rank() == 3) d.kind = DocumentKind::tensor3;
  else throw DocumentError("only rank 2 and 3 tensors are serializable");
  d.terms = tensor_terms(t);
  if (t.t_order()) d.metadata["t_order"] = *t.t_order();
  return d;
}

ExpressionDocument make_document(const RCBracketSet& set) {
  ExpressionDocument d;
  d.kind = DocumentKind::rc_set;
  for (unsigned n = 0; n < set.elements.size(); ++n)
    for (auto term : tensor_terms(set.elements[n])) {
      term["order"] = n;
      d.terms.push_back(std::move(term));
    }
  d.metadata["max_order"] = set.max_order;
  return d;
}

HsElement to_hs_element(const ExpressionDocument& doc) {
  expect_kind(doc, DocumentKind::hs_element);
  HsElement h;
  for (const auto& term : doc.terms) h.add(op_from(chain_of(term, 1)[0]), coef_from(term));
  return h;
}

HtsElement to_hts_element(const ExpressionDocument& doc) {
  expect_kind(doc, DocumentKind::hts_element);
  HtsElement h;
  for (const auto& term : doc.terms) {
    const json& c = chain_of(term, 3);
    h.add(HtsMonomial(jets_from(c[0]), jets_from(c[2]), op_from(c[1])), coef_from(term));
  }
  return h;
}

TensorElement to_tensor(const ExpressionDocument& doc) {
  TensorElement t = tensor_from_terms(doc.terms, rank_of(doc.kind));
  if (doc.metadata.contains("t_order") && doc.metadata["t_order"].is_number_unsigned())
    t.set_t_order(doc.metadata["t_order"].get<unsigned>());
  return t;
}

RCBracketSet to_rc_set(const ExpressionDocument& doc) {
  expect_kind(doc, DocumentKind::rc_set);
  RCBracketSet set;
  for (const auto& term : doc.terms) {
    if (!term.contains("order")) throw DocumentError("rc_set term without order");
    const unsigned n = as_unsigned(term["order"], "order");
    while (set.elements.size() <= n) set.elements.emplace_back(2);
    set.elements[n].add(chain_from(chain_of(term, 5), 2), coef_from(term));
  }
  if (doc.metadata.contains("max_order")) set.max_order = as_unsigned(doc.metadata["max_order"], "max_order");
  else set.max_order = set.elements.empty() ? 0 : static_cast<unsigned>(set.elements.size() - 1);
  while (set.elements.size() <= set.max_order) set.elements.emplace_back(2);
  for (unsigned n = 0; n < set.elements.size(); ++n) set.elements[n].set_t_order(n);
  return set;
}

std::string print(const ExpressionDocument& doc) {
  // One term per line keeps large documents diff-able.
  std::ostringstream os;
  os << "{\n";
  os << "  \"hash\": " << json(doc.content_hash()).dump() << ",\n";
  os << "  \"kind\": " << json(to_string(doc.kind)).dump() << ",\n";
  os << "  \"metadata\": " << doc.metadata.dump() << ",\n";
  os << "  \"schema_version\": " << json(doc.schema_version).dump() << ",\n";
  os << "  \"terms\": [";
  for (std::size_t i = 0; i < doc.terms.size(); ++i) os << (i ? ",\n    " : "\n    ") << doc.terms[i].dump();
  os << (doc.terms.empty() ? "]\n" : "\n  ]\n");
  os << "}\n";
  return os.str();
}

ExpressionDocument parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw DocumentError("document must be an object");
  for (const char* key : {"kind", "terms", "schema_version"})
    if (!j.contains(key)) throw DocumentError(std::string("missing field: ") + key);
  ExpressionDocument doc;
  if (!j["schema_version"].is_string()) throw DocumentError("schema_version must be a string");
  doc.schema_version = j["schema_version"].get<std::string>();
  if (doc.schema_version != "1") throw DocumentError("unsupported schema_version " + doc.schema_version);
  if (!j["kind"].is_string()) throw DocumentError("kind must be a string");
  doc.kind = parse_kind(j["kind"].get<std::string>());
  if (!j["terms"].is_array()) throw DocumentError("terms must be an array");
  doc.terms = j["terms"];
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw DocumentError("metadata must be an object");
    doc.metadata = j["metadata"];
  }
  doc.terms = canonical_terms(doc);
  if (j.contains("hash")) {
    if (!j["hash"].is_string() || j["hash"].get<std::string>() != doc.content_hash())
      throw DocumentError("content hash mismatch");
  }
  return doc;
}

ExpressionDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void write_document(const std::filesystem::path& path, const ExpressionDocument& doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DocumentError("cannot write " + path.string());
  out << print(doc);
  if (!out) throw DocumentError("write failed: " + path.string());
}

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<DiskCache> DiskCache::from_environment(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return DiskCache(*flag);
  if (const char* env = std::getenv("RC_CACHE_DIR"); env && *env) return DiskCache(env);
  return std::nullopt;
}

std::filesystem::path DiskCache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<ExpressionDocument> DiskCache::load(const std::string& key) const {
  const auto p = path_for(key);
  std::error_code ec;
  if (!std::filesystem::exists(p, ec)) return std::nullopt;
  try {
    return read_document(p);
  } catch (const DocumentError&) {
    return std::nullopt;  // a corrupt entry is treated as a miss and rewritten
  }
}

void DiskCache::store(const std::string& key, const ExpressionDocument& doc) const {
  std::filesystem::create_directories(dir_);
  const auto lock_path = dir_ / ".lock";
  const int fd = ::open(lock_path.c_str(), O_CREAT | O_RDWR, 0644);
  if (fd < 0) throw DocumentError("cannot open cache lock " + lock_path.string());
  ::flock(fd, LOCK_EX);
  const auto target = path_for(key);
  const auto tmp = dir_ / (key + ".json.tmp." + std::to_string(::getpid()));
  try {
    write_document(tmp, doc);
    std::filesystem::rename(tmp, target);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    ::flock(fd, LOCK_UN);
    ::close(fd);
    throw;
  }
  ::flock(fd, LOCK_UN);
  ::close(fd);
}

std::vector<DiskCache::Entry> DiskCache::inspect() const {
  std::vector<Entry> out;
  std::error_code ec;
  if (!std::filesystem::is_directory(dir_, ec)) return out;
  for (const auto& e : std::filesystem::directory_iterator(dir_)) {
    if (!e.is_regular_file() || e.path().extension() != ".json") continue;
    Entry entry{e.path().stem().string(), e.file_size(), ""};
    try {
      entry.hash = read_document(e.path()).content_hash();
    } catch (const DocumentError&) {
      entry.hash = "corrupt";
    }
    out.push_back(std::move(entry));
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
  return out;
}

std::size_t DiskCache::clear() const {
  std::size_t n = 0;
  std::error_code ec;
  if (!std::filesystem::is_directory(dir_, ec)) return 0;
  for (const auto& e : std::filesystem::directory_iterator(dir_))
    if (e.is_regular_file() && e.path().extension() == ".json") n += std::filesystem::remove(e.path()) ? 1 : 0;
  return n;
}

const TensorElement& DiskCache::rc(unsigned n) const {
  const std::string key = "RC_" + std::to_string(n);
  if (rc::has_RC(n)) {
    if (load(key).has_value()) return rc::compute_RC(n);
  } else if (auto doc = load(key); doc && doc->kind == DocumentKind::tensor2) {
    rc::seed_RC(n, to_tensor(*doc));
    return rc::compute_RC(n);
  }
  const TensorElement& value = rc::compute_RC(n);
  ExpressionDocument doc = make_document(value);
  doc.metadata["operation"] = "RC";
  doc.metadata["order"] = n;
  store(key, doc);
  return value;
}

}  // namespace rchopf
