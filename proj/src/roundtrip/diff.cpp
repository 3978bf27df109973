#include "caskbridge/roundtrip/diff.hpp"

#include <algorithm>

#include "caskbridge/json/path.hpp"

namespace caskbridge::roundtrip {

namespace {

const char* kind_name(json::Kind kind) {
  switch (kind) {
    case json::Kind::kNull: return "null";
    case json::Kind::kBool: return "boolean";
    case json::Kind::kNumber: return "number";
    case json::Kind::kString: return "string";
    case json::Kind::kArray: return "array";
    case json::Kind::kObject: return "object";
  }
  return "?";
}

std::string scalar_text(const json::Json& v) {
  switch (v.kind()) {
    case json::Kind::kNull: return "null";
    case json::Kind::kBool: return v.as_bool() ? "true" : "false";
    case json::Kind::kNumber: return v.number_text();
    case json::Kind::kString: return "\"" + json::escape_json_string(v.as_string()) + "\"";
    default: return kind_name(v.kind());
  }
}

void compare(const json::Json& a, const json::Json& b, json::Location& at, DocDiff& out) {
  if (a.kind() != b.kind()) {
    out.entries.push_back({json::to_string(at), DiffKind::kValueMismatch,
                           std::string(kind_name(a.kind())) + " vs " + kind_name(b.kind())});
    return;
  }
  if (a.is_object()) {
    for (const auto& [name, value] : a.as_object()) {
      at.emplace_back(name);
      if (const json::Json* other = b.find(name)) {
        compare(value, *other, at, out);
      } else {
        out.entries.push_back({json::to_string(at), DiffKind::kMissing, scalar_text(value)});
      }
      at.pop_back();
    }
    for (const auto& [name, value] : b.as_object()) {
      if (a.find(name)) continue;
      at.emplace_back(name);
      out.entries.push_back({json::to_string(at), DiffKind::kExtra, scalar_text(value)});
      at.pop_back();
    }
  } else if (a.is_array()) {
    const auto& xs = a.as_array();
    const auto& ys = b.as_array();
    for (std::size_t i = 0; i < std::max(xs.size(), ys.size()); ++i) {
      at.emplace_back(i);
      if (i >= ys.size()) {
        out.entries.push_back({json::to_string(at), DiffKind::kMissing, scalar_text(xs[i])});
      } else if (i >= xs.size()) {
        out.entries.push_back({json::to_string(at), DiffKind::kExtra, scalar_text(ys[i])});
      } else {
        compare(xs[i], ys[i], at, out);
      }
      at.pop_back();
    }
  } else if (!(a == b)) {
    out.entries.push_back({json::to_string(at), DiffKind::kValueMismatch, scalar_text(a) + " vs " + scalar_text(b)});
  }
}

}  // namespace

GraphDiff diff_graphs(const rdf::Graph& a, const rdf::Graph& b) {
  GraphDiff out;
  if (a.has_blank_nodes() || b.has_blank_nodes()) {
    if (rdf::isomorphic(a, b)) return out;
    rdf::Graph ca = rdf::canonicalize_blank_nodes(a);
    rdf::Graph cb = rdf::canonicalize_blank_nodes(b);
    for (const auto& t : ca) {
      if (!cb.contains(t)) out.only_left.push_back(t);
    }
    for (const auto& t : cb) {
      if (!ca.contains(t)) out.only_right.push_back(t);
    }
    return out;
  }
  for (const auto& t : a) {
    if (!b.contains(t)) out.only_left.push_back(t);
  }
  for (const auto& t : b) {
    if (!a.contains(t)) out.only_right.push_back(t);
  }
  return out;
}

std::string to_string(DiffKind kind) {
  switch (kind) {
    case DiffKind::kMissing: return "Missing";
    case DiffKind::kExtra: return "Extra";
    case DiffKind::kValueMismatch: return "ValueMismatch";
  }
  return "?";
}

DocDiff diff_docs(const json::Json& a, const json::Json& b) {
  DocDiff out;
  json::Location at;
  compare(a, b, at, out);
  return out;
}

}  // namespace caskbridge::roundtrip
