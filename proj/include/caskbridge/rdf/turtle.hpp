#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "caskbridge/rdf/graph.hpp"

namespace caskbridge::rdf {

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

class UnknownPrefix : public Error {
 public:
  explicit UnknownPrefix(const std::string& prefix)
      : Error("undeclared prefix '" + prefix + ":'"), prefix_(prefix) {}
  const std::string& prefix() const { return prefix_; }

 private:
  std::string prefix_;
};

class MissingBase : public Error {
 public:
  explicit MissingBase(const std::string& reference)
      : Error("relative IRI <" + reference + "> without a base IRI"), reference_(reference) {}
  const std::string& reference() const { return reference_; }

 private:
  std::string reference_;
};

/// Parses a Turtle document. Supported: @prefix/@base (and the SPARQL-style
/// PREFIX/BASE), IRIs, prefixed names, the `a` keyword, predicate lists,
/// object lists, string literals (short and long form) with language tag or
/// datatype, numeric and boolean shorthand, labelled blank nodes, `[]` and
/// `[ ... ]` blank node property lists, and comments. Collections are
/// rejected with SyntaxError.
///
/// Blank nodes are relabelled `b0`, `b1`, ... in order of first appearance.
Graph parse_turtle(std::string_view text, const std::optional<std::string>& base = std::nullopt);

/// Writes `graph` as Turtle. Prefix declarations come first (sorted by
/// label), then subjects in sorted order with their predicate/object lists.
/// The output is byte-identical for equal graphs with equal prefix maps.
std::string serialize_turtle(const Graph& graph);

/// Resolves `reference` against `base` (RFC 3986 section 5.2).
std::string resolve_iri(std::string_view reference, std::string_view base);

}  // namespace caskbridge::rdf
