#include <cctype>
#include <regex>
#include <sstream>

#include "caskbridge/rdf/turtle.hpp"

namespace caskbridge::rdf {

namespace {

// Conservative PN_LOCAL subset: anything outside it is written as <iri>.
bool is_simple_local(std::string_view local) {
  if (local.empty()) return true;
  auto first = static_cast<unsigned char>(local.front());
  if (!std::isalnum(first) && first != '_') return false;
  for (char c : local) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_' && c != '-') return false;
  }
  return true;
}

class TermWriter {
 public:
  explicit TermWriter(const std::map<std::string, std::string>& prefixes) : prefixes_(prefixes) {}

  std::string iri(const std::string& value) const {
    const std::string* best_label = nullptr;
    std::size_t best_len = 0;
    for (const auto& [label, ns] : prefixes_) {
      if (ns.size() > best_len && value.size() >= ns.size() && value.compare(0, ns.size(), ns) == 0 &&
          is_simple_local(std::string_view(value).substr(ns.size()))) {
        best_label = &label;
        best_len = ns.size();
      }
    }
    if (best_label) return *best_label + ":" + value.substr(best_len);
    return "<" + value + ">";
  }

  std::string term(const Term& t) const {
    switch (t.kind()) {
      case TermKind::kIri:
        return iri(t.value());
      case TermKind::kBlank:
        return "_:" + t.value();
      case TermKind::kLiteral:
        break;
    }
    static const std::regex kInteger("[+-]?[0-9]+");
    if (t.datatype() == xsd::kInteger && std::regex_match(t.value(), kInteger)) return t.value();
    if (t.datatype() == xsd::kBoolean && (t.value() == "true" || t.value() == "false")) return t.value();
    std::string out = "\"" + escape_string(t.value()) + "\"";
    if (!t.language().empty()) {
      out += "@" + t.language();
    } else if (t.datatype() != xsd::kString) {
      out += "^^" + iri(t.datatype());
    }
    return out;
  }

 private:
  const std::map<std::string, std::string>& prefixes_;
};

}  // namespace

std::string serialize_turtle(const Graph& graph) {
  std::ostringstream out;
  for (const auto& [label, ns] : graph.prefixes()) out << "@prefix " << label << ": <" << ns << "> .\n";
  if (!graph.prefixes().empty() && !graph.empty()) out << "\n";

  TermWriter w(graph.prefixes());
  const Term* subject = nullptr;
  const Term* predicate = nullptr;
  for (const auto& t : graph) {
    if (!subject || t.subject != *subject) {
      if (subject) out << " .\n\n";
      out << w.term(t.subject) << "\n    ";
      subject = &t.subject;
      predicate = nullptr;
    }
    if (!predicate || t.predicate != *predicate) {
      if (predicate) out << " ;\n    ";
      out << (t.predicate.value() == rdfns::kType ? std::string("a") : w.term(t.predicate)) << " ";
      predicate = &t.predicate;
    } else {
      out << ",\n        ";
    }
    out << w.term(t.object);
  }
  if (subject) out << " .\n";
  return out.str();
}

}  // namespace caskbridge::rdf
