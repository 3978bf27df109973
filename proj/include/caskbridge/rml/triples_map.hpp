#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "caskbridge/json/path.hpp"
#include "caskbridge/rdf/graph.hpp"

namespace caskbridge::rml {

namespace vocab {
inline constexpr std::string_view kRr = "http://www.w3.org/ns/r2rml#";
inline constexpr std::string_view kRml = "http://semweb.mmlab.be/ns/rml#";
inline constexpr std::string_view kQl = "http://semweb.mmlab.be/ns/ql#";
}  // namespace vocab

class MissingSubjectMap : public Error {
 public:
  explicit MissingSubjectMap(const std::string& rule) : Error("triples map " + rule + " has no subject map") {}
};

class MissingLogicalSource : public Error {
 public:
  explicit MissingLogicalSource(const std::string& rule)
      : Error("triples map " + rule + " has no logical source") {}
};

class BadTemplate : public Error {
 public:
  BadTemplate(const std::string& rule, const std::string& text, const std::string& why)
      : Error("triples map " + rule + ": bad template \"" + text + "\": " + why), text_(text) {}
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

class InvalidRule : public Error {
 public:
  using Error::Error;
};

/// A string with `{reference}` placeholders. Literal braces and backslashes
/// are written `\{`, `\}` and `\\`.
class TemplateString {
 public:
  struct Placeholder {
    std::string reference;
    json::PathExpr path;
  };
  using Segment = std::variant<std::string, Placeholder>;

  /// Throws BadTemplate (with `rule` for context) on unbalanced braces, empty
  /// placeholders or references outside the path subset.
  static TemplateString parse(std::string_view text, const std::string& rule);

  const std::vector<Segment>& segments() const { return segments_; }
  const std::string& text() const { return text_; }
  bool has_placeholders() const;

 private:
  std::string text_;
  std::vector<Segment> segments_;
};

/// Compiles a reference relative to the iterator element: `idShort`,
/// `value[0].text`, `['id']`, or an absolute `$...` path.
json::PathExpr compile_reference(std::string_view reference);

enum class TermType { kIri, kBlankNode, kLiteral };

struct LogicalSource {
  std::string source_ref;
  json::PathExpr iterator;
  std::string reference_formulation{"JSONPath"};
};

struct SubjectMap {
  std::variant<TemplateString, rdf::Term, json::PathExpr> value;
  std::string reference;  // set when `value` holds a reference path
  std::vector<rdf::Iri> classes;
};

struct ConstantObject {
  rdf::Term term;
};

struct ReferenceObject {
  std::string reference;
  json::PathExpr path;
  std::optional<rdf::Iri> datatype;
  std::string language;
  TermType term_type = TermType::kLiteral;
};

struct TemplateObject {
  TemplateString value;
  TermType term_type = TermType::kIri;
  std::optional<rdf::Iri> datatype;
  std::string language;
};

using ObjectMap = std::variant<ConstantObject, ReferenceObject, TemplateObject>;

struct PredicateObjectMap {
  rdf::Iri predicate;
  ObjectMap object;
};

struct TriplesMap {
  std::string id;  // string form of the rule node
  LogicalSource source;
  SubjectMap subject;
  std::vector<PredicateObjectMap> predicate_objects;
};

/// One TriplesMap per node typed rr:TriplesMap or carrying an
/// rml:logicalSource / rr:subjectMap, sorted by node.
std::vector<TriplesMap> parse_triples_maps(const rdf::Graph& rules);

}  // namespace caskbridge::rml
