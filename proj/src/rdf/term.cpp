#include "caskbridge/rdf/term.hpp"

#include <cctype>
#include <cstdio>

namespace caskbridge::rdf {

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool is_absolute_iri(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || !is_alpha(text[0])) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    char c = text[i];
    if (!is_alpha(c) && !is_digit(c) && c != '+' && c != '-' && c != '.') return false;
  }
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || u == 0x7f) return false;
    switch (c) {
      case '<': case '>': case '"': case '{': case '}':
      case '|': case '^': case '`': case '\\':
        return false;
      default:
        break;
    }
  }
  return true;
}

bool is_language_tag(std::string_view tag) {
  std::size_t i = 0;
  std::size_t n = 0;
  while (i < tag.size() && is_alpha(tag[i])) ++i, ++n;
  if (n < 1 || n > 8) return false;
  while (i < tag.size()) {
    if (tag[i] != '-') return false;
    ++i;
    n = 0;
    while (i < tag.size() && (is_alpha(tag[i]) || is_digit(tag[i]))) ++i, ++n;
    if (n < 1 || n > 8) return false;
  }
  return true;
}

bool is_blank_label(std::string_view label) {
  if (label.empty()) return false;
  for (char c : label) {
    if (!is_alpha(c) && !is_digit(c) && c != '_') return false;
  }
  return true;
}

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!is_absolute_iri(value_)) throw InvalidIri(value_);
}

Term::Term(const Iri& iri) : kind_(TermKind::kIri), value_(iri.str()) { build_key(); }

Term::Term(const Literal& literal)
    : kind_(TermKind::kLiteral),
      value_(literal.lexical),
      datatype_(literal.datatype),
      language_(literal.language) {
  if (!language_.empty()) {
    if (!is_language_tag(language_)) throw InvalidTerm("malformed language tag '" + language_ + "'");
    if (datatype_ != rdfns::kLangString) {
      throw InvalidTerm("language-tagged literal must have datatype rdf:langString");
    }
  } else {
    if (datatype_.empty()) datatype_ = std::string(xsd::kString);
    if (datatype_ == rdfns::kLangString) throw InvalidTerm("rdf:langString literal without language tag");
    if (!is_absolute_iri(datatype_)) throw InvalidIri(datatype_);
  }
  build_key();
}

Term Term::blank(std::string label) {
  if (!is_blank_label(label)) throw InvalidTerm("invalid blank node label '" + label + "'");
  Term t;
  t.kind_ = TermKind::kBlank;
  t.value_ = std::move(label);
  t.build_key();
  return t;
}

void Term::build_key() {
  switch (kind_) {
    case TermKind::kIri:
      key_ = "<" + value_ + ">";
      break;
    case TermKind::kBlank:
      key_ = "_:" + value_;
      break;
    case TermKind::kLiteral:
      key_ = "\"" + escape_string(value_) + "\"";
      if (!language_.empty()) {
        key_ += "@" + language_;
      } else if (datatype_ != xsd::kString) {
        key_ += "^^<" + datatype_ + ">";
      }
      break;
  }
}

Triple::Triple(Term s, Term p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (subject.is_literal()) throw InvalidTerm("literal in subject position: " + subject.str());
  if (!predicate.is_iri()) throw InvalidTerm("predicate must be an IRI: " + predicate.str());
}

std::string to_string(const Triple& t) {
  return t.subject.str() + " " + t.predicate.str() + " " + t.object.str() + " .";
}

std::string escape_string(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: {
        auto u = static_cast<unsigned char>(c);
        if (u < 0x20 || u == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", u);
          out += buf;
        } else {
          out += c;
        }
      }
    }
  }
  return out;
}

}  // namespace caskbridge::rdf
