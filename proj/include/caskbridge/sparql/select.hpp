#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "caskbridge/rdf/graph.hpp"

namespace caskbridge::sparql {

class UnsupportedFeature : public Error {
 public:
  explicit UnsupportedFeature(const std::string& token)
      : Error("unsupported query feature: " + token), token_(token) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : Error("query offset " + std::to_string(offset) + ": " + message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct Variable {
  std::string name;
  friend bool operator==(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<rdf::Term, Variable>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
};

/// Expressions allowed in BIND: a variable, a string literal, STR(e) or
/// STRAFTER(e, e).
struct Expression {
  enum class Op { kVariable, kLiteral, kStr, kStrAfter };
  Op op = Op::kLiteral;
  std::string text;  // variable name or literal value
  std::vector<Expression> args;
};

struct Bind {
  Expression expression;
  std::string target;
};

struct SelectQuery {
  std::map<std::string, std::string> prefixes;
  std::vector<std::string> variables;  // projection, in SELECT order
  std::vector<TriplePattern> patterns;
  std::vector<Bind> binds;
};

using BindingSet = std::map<std::string, rdf::Term>;

SelectQuery parse_query(std::string_view text);

/// Solutions of the basic graph pattern, extended by the binds in order,
/// projected, deduplicated and sorted by the string forms of the projected
/// terms. Rows leaving a projected variable unbound are dropped.
std::vector<BindingSet> evaluate_select(const SelectQuery& query, const rdf::Graph& graph);

/// Text after `separator` in `value`. With separator "#" and no '#' present,
/// falls back to the text after the last '/', then to the whole value.
std::string local_name_after(std::string_view value, std::string_view separator);

}  // namespace caskbridge::sparql
