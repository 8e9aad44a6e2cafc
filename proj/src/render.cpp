#include "bubble/render.hpp"

#include <cstdio>
#include <sstream>

#include <openssl/sha.h>

namespace bubble {

Format parse_format(const std::string& name) {
  if (name == "ascii") return Format::Ascii;
  if (name == "json") return Format::Json;
  if (name == "dot") return Format::Dot;
  throw Error(ErrorCode::InvalidInput, "unknown output format '" + name + "'");
}

PBTRecord PBTRecord::from(const PBTNode& n) {
  PBTRecord r;
  for (const auto& c : n.rep) r.rep.push_back(c.to_string());
  for (const auto& c : n.leading) r.leading.push_back(c.to_string());
  r.order = n.order;
  r.cumulative_exponent = n.cumulative_exponent.to_string();
  r.ambient = n.subspace.ade.to_string();
  for (const auto& s : n.singularities) r.singularities.push_back(s.ade.to_string());
  r.smooth = n.singularities.empty();
  for (const auto& c : n.children) r.children.push_back(from(c));
  return r;
}

DBSRecord DBSRecord::from(const ak::DBSNode& n) {
  DBSRecord r;
  r.indices = n.indices;
  r.level = n.level;
  for (const auto& c : n.children) r.children.push_back(from(c));
  return r;
}

void to_json(nlohmann::json& j, const PBTRecord& r) {
  j = nlohmann::json{{"rep", r.rep},
                     {"leading", r.leading},
                     {"order", r.order},
                     {"cumulative_exponent", r.cumulative_exponent},
                     {"ambient", r.ambient},
                     {"singularities", r.singularities},
                     {"smooth", r.smooth},
                     {"children", r.children}};
}

void from_json(const nlohmann::json& j, PBTRecord& r) {
  j.at("rep").get_to(r.rep);
  j.at("leading").get_to(r.leading);
  j.at("order").get_to(r.order);
  j.at("cumulative_exponent").get_to(r.cumulative_exponent);
  j.at("ambient").get_to(r.ambient);
  j.at("singularities").get_to(r.singularities);
  j.at("smooth").get_to(r.smooth);
  j.at("children").get_to(r.children);
}

void to_json(nlohmann::json& j, const DBSRecord& r) {
  j = nlohmann::json{{"indices", r.indices}, {"level", r.level}, {"children", r.children}};
}

void from_json(const nlohmann::json& j, DBSRecord& r) {
  j.at("indices").get_to(r.indices);
  j.at("level").get_to(r.level);
  j.at("children").get_to(r.children);
}

void to_json(nlohmann::json& j, const TreeDocument& d) {
  j["metadata"] = {{"tool", d.metadata.tool},
                   {"version", d.metadata.version},
                   {"input_digest", d.metadata.input_digest}};
  if (const auto* p = std::get_if<PBTRecord>(&d.tree)) {
    j["kind"] = "pbt";
    j["tree"] = *p;
  } else {
    j["kind"] = "dbs";
    j["tree"] = std::get<DBSRecord>(d.tree);
  }
}

void from_json(const nlohmann::json& j, TreeDocument& d) {
  const auto& m = j.at("metadata");
  m.at("tool").get_to(d.metadata.tool);
  m.at("version").get_to(d.metadata.version);
  m.at("input_digest").get_to(d.metadata.input_digest);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "pbt") {
    d.tree = j.at("tree").get<PBTRecord>();
  } else if (kind == "dbs") {
    d.tree = j.at("tree").get<DBSRecord>();
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown tree kind '" + kind + "'");
  }
}

std::string content_digest(const std::string& canonical_text) {
  unsigned char md[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(canonical_text.data()), canonical_text.size(), md);
  std::string hex = "sha256:";
  char buf[3];
  for (unsigned char c : md) {
    std::snprintf(buf, sizeof buf, "%02x", c);
    hex += buf;
  }
  return hex;
}

std::string scale_text(const Rational& exponent) {
  return "|t|^(" + (-exponent).to_string() + ")";
}

namespace {

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
  return s;
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string pbt_line(const PBTNode& n) {
  std::vector<std::string> sings;
  for (const auto& s : n.singularities) sings.push_back(s.ade.to_string());
  return to_string(n.leading) + " @ " + n.subspace.ade.to_string() +
         ", sings: " + (sings.empty() ? std::string("none") : join(sings, ",")) +
         ", k=" + std::to_string(n.order) + ", scale=" + scale_text(n.cumulative_exponent);
}

void ascii_pbt(const PBTNode& n, std::size_t depth, std::ostringstream& out) {
  out << std::string(2 * depth, ' ') << pbt_line(n) << '\n';
  for (const auto& c : n.children) ascii_pbt(c, depth + 1, out);
}

void dot_pbt(const PBTNode& n, std::size_t& next_id, std::ostringstream& out) {
  const std::size_t id = next_id++;
  std::vector<std::string> sings;
  for (const auto& s : n.singularities) sings.push_back(s.ade.to_string());
  out << "  n" << id << " [label=\"" << to_string(n.leading) << " @ " << n.subspace.ade.to_string()
      << "\\nsings: " << (sings.empty() ? std::string("none") : join(sings, ","))
      << "\\nk=" << n.order << ", scale=" << scale_text(n.cumulative_exponent) << "\"];\n";
  for (const auto& c : n.children) {
    const std::size_t child = next_id;
    dot_pbt(c, next_id, out);
    out << "  n" << id << " -> n" << child << ";\n";
  }
}

void ascii_dbs(const ak::DBSNode& n, std::size_t depth, std::ostringstream& out) {
  out << std::string(2 * depth, ' ') << join_indices(n.indices) << " level=" << n.level << '\n';
  for (const auto& c : n.children) ascii_dbs(c, depth + 1, out);
}

void dot_dbs(const ak::DBSNode& n, std::size_t& next_id, std::ostringstream& out) {
  const std::size_t id = next_id++;
  out << "  n" << id << " [label=\"" << join_indices(n.indices) << "\\nlevel=" << n.level << "\"];\n";
  for (const auto& c : n.children) {
    const std::size_t child = next_id;
    dot_dbs(c, next_id, out);
    out << "  n" << id << " -> n" << child << ";\n";
  }
}

}  // namespace

std::string render(const PBTree& tree, Format format, const DocumentMetadata& meta) {
  std::ostringstream out;
  switch (format) {
    case Format::Ascii:
      ascii_pbt(tree.root, 0, out);
      break;
    case Format::Dot: {
      out << "digraph pbt {\n  node [shape=box];\n";
      std::size_t id = 0;
      dot_pbt(tree.root, id, out);
      out << "}\n";
      break;
    }
    case Format::Json:
      out << nlohmann::json(TreeDocument{meta, PBTRecord::from(tree.root)}).dump(2) << '\n';
      break;
  }
  return out.str();
}

std::string render(const ak::DBSNode& tree, Format format, const DocumentMetadata& meta) {
  std::ostringstream out;
  switch (format) {
    case Format::Ascii:
      ascii_dbs(tree, 0, out);
      break;
    case Format::Dot: {
      out << "digraph dbs {\n  node [shape=box];\n";
      std::size_t id = 0;
      dot_dbs(tree, id, out);
      out << "}\n";
      break;
    }
    case Format::Json:
      out << nlohmann::json(TreeDocument{meta, DBSRecord::from(tree)}).dump(2) << '\n';
      break;
  }
  return out.str();
}

}  // namespace bubble
