#pragma once

#include <string>
#include <vector>

#include "caskbridge/json/value.hpp"
#include "caskbridge/rdf/graph.hpp"

namespace caskbridge::roundtrip {

struct GraphDiff {
  std::vector<rdf::Triple> only_left;
  std::vector<rdf::Triple> only_right;
  bool empty() const { return only_left.empty() && only_right.empty(); }
};

/// Empty for isomorphic graphs; otherwise the set differences after
/// canonical blank node labelling, each sorted.
GraphDiff diff_graphs(const rdf::Graph& a, const rdf::Graph& b);

enum class DiffKind { kMissing, kExtra, kValueMismatch };

std::string to_string(DiffKind kind);

struct DocDiffEntry {
  std::string location;
  DiffKind kind;
  std::string detail;
};

struct DocDiff {
  std::vector<DocDiffEntry> entries;
  bool empty() const { return entries.empty(); }
};

/// Structural comparison. Object member order is ignored, array order is
/// not. Missing: only in `a`; Extra: only in `b`.
DocDiff diff_docs(const json::Json& a, const json::Json& b);

}  // namespace caskbridge::roundtrip
