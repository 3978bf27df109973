#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "caskbridge/error.hpp"

namespace caskbridge::rdf {

class InvalidIri : public Error {
 public:
  explicit InvalidIri(const std::string& iri)
      : Error("invalid absolute IRI: '" + iri + "'"), iri_(iri) {}
  const std::string& iri() const { return iri_; }

 private:
  std::string iri_;
};

class InvalidTerm : public Error {
 public:
  using Error::Error;
};

namespace xsd {
inline constexpr std::string_view kNs = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view kInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kDouble = "http://www.w3.org/2001/XMLSchema#double";
}  // namespace xsd

namespace rdfns {
inline constexpr std::string_view kNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
}  // namespace rdfns

namespace rdfs {
inline constexpr std::string_view kNs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kComment = "http://www.w3.org/2000/01/rdf-schema#comment";
}  // namespace rdfs

/// True if `text` is a syntactically valid absolute IRI: a scheme followed by
/// ':' and no whitespace, control characters or any of <>"{}|^`\.
bool is_absolute_iri(std::string_view text);

/// True if `tag` is a well-formed language tag (1-8 letters, then
/// '-'-separated groups of 1-8 letters or digits).
bool is_language_tag(std::string_view tag);

/// True if `label` is a valid blank node label for this library: [A-Za-z0-9_]+.
bool is_blank_label(std::string_view label);

class Iri {
 public:
  /// Throws InvalidIri unless `value` is an absolute IRI.
  explicit Iri(std::string value);

  const std::string& str() const { return value_; }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

struct Literal {
  std::string lexical;
  std::string datatype{xsd::kString};
  std::string language;

  static Literal string(std::string lexical) { return {std::move(lexical), std::string(xsd::kString), {}}; }
  static Literal typed(std::string lexical, const Iri& datatype) {
    return {std::move(lexical), datatype.str(), {}};
  }
  static Literal tagged(std::string lexical, std::string language) {
    return {std::move(lexical), std::string(rdfns::kLangString), std::move(language)};
  }
};

enum class TermKind { kIri, kBlank, kLiteral };

/// An RDF term. Terms compare and order by their N-Triples string form, which
/// is computed once at construction; literal equality is therefore term
/// equality (lexical form + datatype + language tag), never value equality.
class Term {
 public:
  Term(const Iri& iri);  // NOLINT(google-explicit-constructor)
  Term(const Literal& literal);  // NOLINT(google-explicit-constructor)

  static Term iri(std::string value) { return Term(Iri(std::move(value))); }
  static Term blank(std::string label);
  static Term literal(std::string lexical) { return Term(Literal::string(std::move(lexical))); }

  TermKind kind() const { return kind_; }
  bool is_iri() const { return kind_ == TermKind::kIri; }
  bool is_blank() const { return kind_ == TermKind::kBlank; }
  bool is_literal() const { return kind_ == TermKind::kLiteral; }

  /// IRI string, blank node label (without "_:"), or literal lexical form.
  const std::string& value() const { return value_; }
  const std::string& datatype() const { return datatype_; }
  const std::string& language() const { return language_; }

  /// N-Triples form: <iri>, _:label, "lexical", "lexical"@tag or "lexical"^^<dt>.
  const std::string& str() const { return key_; }

  friend bool operator==(const Term& a, const Term& b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) { return a.key_ <=> b.key_; }

 private:
  Term() = default;
  void build_key();

  TermKind kind_ = TermKind::kIri;
  std::string value_;
  std::string datatype_;
  std::string language_;
  std::string key_;
};

/// Subject is an IRI or blank node, predicate is an IRI; anything else throws
/// InvalidTerm.
struct Triple {
  Triple(Term s, Term p, Term o);

  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple& a, const Triple& b) {
    if (auto c = a.subject <=> b.subject; c != 0) return c;
    if (auto c = a.predicate <=> b.predicate; c != 0) return c;
    return a.object <=> b.object;
  }
};

std::string to_string(const Triple& triple);

/// Escapes a string for use inside a double-quoted N-Triples/Turtle literal.
std::string escape_string(std::string_view text);

}  // namespace caskbridge::rdf
