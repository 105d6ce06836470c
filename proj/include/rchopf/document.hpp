#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rchopf/hs.hpp"
#include "rchopf/hts.hpp"
#include "rchopf/rc.hpp"
#include "rchopf/tensor.hpp"

namespace rchopf {

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DocumentKind { hs_element, hts_element, tensor2, tensor3, rc_set };

std::string to_string(DocumentKind k);
DocumentKind parse_kind(const std::string& s);

/// Canonical serialized expression. Terms follow the monomial order of the
/// source element; a chain alternates jet slots {"Z<j>": e} and [d1, x, y]
/// operator triples. Metadata is not hashed.
struct ExpressionDocument {
  std::string schema_version = "1";
  DocumentKind kind = DocumentKind::tensor2;
  nlohmann::json terms = nlohmann::json::array();
  nlohmann::json metadata = nlohmann::json::object();

  /// "fnv1a64:<16 hex digits>" over the compact dump of {kind, terms}.
  [[nodiscard]] std::string content_hash() const;
  friend bool operator==(const ExpressionDocument&, const ExpressionDocument&) = default;
};

ExpressionDocument make_document(const HsElement& h);
ExpressionDocument make_document(const HtsElement& h);
/// tensor2 or tensor3 by rank.
ExpressionDocument make_document(const TensorElement& t);
ExpressionDocument make_document(const RCBracketSet& set);

HsElement to_hs_element(const ExpressionDocument& doc);
HtsElement to_hts_element(const ExpressionDocument& doc);
TensorElement to_tensor(const ExpressionDocument& doc);
RCBracketSet to_rc_set(const ExpressionDocument& doc);

/// Pretty JSON with a trailing newline; includes the content hash.
std::string print(const ExpressionDocument& doc);
/// Parses and validates a document. A present "hash" field must match.
ExpressionDocument parse(const std::string& text);

ExpressionDocument read_document(const std::filesystem::path& path);
void write_document(const std::filesystem::path& path, const ExpressionDocument& doc);

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(const std::string& bytes);

/// Directory of serialized RC_n documents. Readers never block; writers take
/// an exclusive lock file and publish through an atomic rename.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);
  /// --cache-dir if given, else $RC_CACHE_DIR, else nullopt.
  static std::optional<DiskCache> from_environment(const std::optional<std::string>& flag);

  [[nodiscard]] const std::filesystem::path& dir() const { return dir_; }
  [[nodiscard]] std::filesystem::path path_for(const std::string& key) const;

  [[nodiscard]] std::optional<ExpressionDocument> load(const std::string& key) const;
  void store(const std::string& key, const ExpressionDocument& doc) const;

  struct Entry {
    std::string key;
    std::uintmax_t bytes = 0;
    std::string hash;
  };
  [[nodiscard]] std::vector<Entry> inspect() const;
  /// Removes cached documents; returns the number removed.
  std::size_t clear() const;

  /// RC_n from the cache, computing and storing it when missing.
  const TensorElement& rc(unsigned n) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace rchopf
