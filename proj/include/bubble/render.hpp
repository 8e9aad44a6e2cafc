#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bubble/ak.hpp"
#include "bubble/pbt.hpp"

namespace bubble {

enum class Format { Ascii, Json, Dot };

Format parse_format(const std::string& name);

/// Serialized period bubbling tree vertex. Exact values are kept as strings.
struct PBTRecord {
  std::vector<std::string> rep;
  std::vector<std::string> leading;
  std::size_t order = 0;
  std::string cumulative_exponent;
  std::string ambient;
  std::vector<std::string> singularities;
  bool smooth = true;
  std::vector<PBTRecord> children;

  static PBTRecord from(const PBTNode& n);
  friend bool operator==(const PBTRecord&, const PBTRecord&) = default;
};

struct DBSRecord {
  std::vector<std::size_t> indices;
  std::size_t level = 0;
  std::vector<DBSRecord> children;

  static DBSRecord from(const ak::DBSNode& n);
  friend bool operator==(const DBSRecord&, const DBSRecord&) = default;
};

struct DocumentMetadata {
  std::string tool = "bubbletree";
  std::string version;
  std::string input_digest;
  friend bool operator==(const DocumentMetadata&, const DocumentMetadata&) = default;
};

struct TreeDocument {
  DocumentMetadata metadata;
  std::variant<PBTRecord, DBSRecord> tree;
  friend bool operator==(const TreeDocument&, const TreeDocument&) = default;
};

void to_json(nlohmann::json& j, const PBTRecord& r);
void from_json(const nlohmann::json& j, PBTRecord& r);
void to_json(nlohmann::json& j, const DBSRecord& r);
void from_json(const nlohmann::json& j, DBSRecord& r);
void to_json(nlohmann::json& j, const TreeDocument& d);
void from_json(const nlohmann::json& j, TreeDocument& d);

/// "sha256:<hex>" of the given canonical text.
std::string content_digest(const std::string& canonical_text);

/// "|t|^(-1/2)"
std::string scale_text(const Rational& exponent);

std::string render(const PBTree& tree, Format format, const DocumentMetadata& meta = {});
std::string render(const ak::DBSNode& tree, Format format, const DocumentMetadata& meta = {});

}  // namespace bubble
