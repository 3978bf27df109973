#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "caskbridge/json/path.hpp"
#include "caskbridge/sparql/select.hpp"

namespace caskbridge::rdfex {

class UnknownVariableInSnippet : public Error {
 public:
  UnknownVariableInSnippet(const std::string& rule, const std::string& var)
      : Error("rule " + rule + ": ?" + var + " is not a projected variable of the query"), rule_(rule), var_(var) {}
  const std::string& rule() const { return rule_; }
  const std::string& variable() const { return var_; }

 private:
  std::string rule_;
  std::string var_;
};

class UnsupportedTargetFormat : public Error {
 public:
  explicit UnsupportedTargetFormat(const std::string& token)
      : Error("unsupported target format '" + token + "'"), token_(token) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

class ContainerNotFound : public Error {
 public:
  ContainerNotFound(const std::string& rule, const std::string& path)
      : Error("rule " + rule + ": container " + path + " not found"), rule_(rule) {}
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

class SnippetInstantiationError : public Error {
 public:
  SnippetInstantiationError(const std::string& rule, const std::string& binding)
      : Error("rule " + rule + ": cannot instantiate snippet for " + binding), rule_(rule) {}
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

class InvalidRuleDocument : public Error {
 public:
  using Error::Error;
};

struct ExtractionRule {
  std::string id;
  std::string source{"ontology"};
  std::string query_text;
  sparql::SelectQuery query;
  std::string target_format{"JSON"};
  std::string container;  // path text; may hold ?var inside filter literals
  json::Json snippet;     // string values and member names may hold ?var
};

/// Reads a rule document: either a JSON array of rules or an object
/// {"prefixes": {label: namespace}, "rules": [...]}. Each rule has "id",
/// "query", "targetFormat", "container" and "snippet" (a JSON value, or JSON
/// text in a string). Declared prefixes are visible to every query.
std::vector<ExtractionRule> parse_extraction_rules(std::string_view document);

/// `?name` occurrences (name = [A-Za-z0-9_]+, longest match) in `text`.
std::vector<std::string> placeholders_in(std::string_view text);

/// Replaces `?name` occurrences with the bound values; names without a
/// binding are left as they are.
std::string substitute(std::string_view text, const std::map<std::string, std::string>& values);

struct InverseResult {
  json::Json document;
  std::map<std::string, std::size_t> inserted;  // per rule id
  std::vector<std::string> warnings;
};

/// Runs the rules in order. Each solution instantiates the snippet and
/// inserts it into the first container match: appended to arrays, added as
/// members to objects. A member that already exists is extended when both
/// sides are arrays and skipped with a warning otherwise.
InverseResult execute_inverse(const std::vector<ExtractionRule>& rules, const rdf::Graph& graph,
                              json::Json skeleton);

}  // namespace caskbridge::rdfex
