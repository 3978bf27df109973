#include "caskbridge/rml/execute.hpp"

namespace caskbridge::rml {

namespace {

void collect_scalars(const json::Json& node, std::vector<std::string>& out) {
  switch (node.kind()) {
    case json::Kind::kString:
      out.push_back(node.as_string());
      break;
    case json::Kind::kNumber:
      out.push_back(node.number_text());
      break;
    case json::Kind::kBool:
      out.emplace_back(node.as_bool() ? "true" : "false");
      break;
    case json::Kind::kArray:
      for (const auto& item : node.as_array()) {
        if (!item.is_array() && !item.is_object()) collect_scalars(item, out);
      }
      break;
    default:
      break;
  }
}

std::vector<std::string> reference_values(const json::Json& element, const json::PathExpr& path) {
  std::vector<std::string> out;
  for (const auto& m : json::evaluate_path(element, path)) collect_scalars(*m.value, out);
  return out;
}

// Cartesian product over placeholder values; empty if any placeholder has
// no value.
std::vector<std::string> instantiate(const TemplateString& tmpl, const json::Json& element, bool encode) {
  std::vector<std::string> partial{""};
  for (const auto& seg : tmpl.segments()) {
    if (const auto* text = std::get_if<std::string>(&seg)) {
      for (auto& p : partial) p += *text;
      continue;
    }
    auto values = reference_values(element, std::get<TemplateString::Placeholder>(seg).path);
    if (values.empty()) return {};
    std::vector<std::string> next;
    next.reserve(partial.size() * values.size());
    for (const auto& p : partial) {
      for (const auto& v : values) next.push_back(p + (encode ? percent_encode(v) : v));
    }
    partial = std::move(next);
  }
  return partial;
}

std::optional<rdf::Term> make_iri(const std::string& value, const rdf::Iri& base) {
  std::string full = rdf::is_absolute_iri(value) ? value : base.str() + value;
  if (!rdf::is_absolute_iri(full)) return std::nullopt;
  return rdf::Term::iri(full);
}

rdf::Term make_literal(std::string lexical, const std::optional<rdf::Iri>& datatype, const std::string& language) {
  if (!language.empty()) return rdf::Literal::tagged(std::move(lexical), language);
  if (datatype) return rdf::Literal::typed(std::move(lexical), *datatype);
  return rdf::Term::literal(std::move(lexical));
}

class Runner {
 public:
  Runner(const rdf::Iri& base, ForwardResult& result) : base_(base), result_(result) {}

  void run(const TriplesMap& map, const json::Json& doc) {
    for (const auto& match : json::evaluate_path(doc, map.source.iterator)) {
      const json::Json& element = *match.value;
      std::string location = json::to_string(match.location);
      for (const auto& subject : subjects(map, element, location)) {
        for (const auto& cls : map.subject.classes) {
          result_.graph.insert(rdf::Triple(subject, rdf::Term::iri(std::string(rdf::rdfns::kType)), cls));
        }
        for (const auto& pom : map.predicate_objects) {
          for (const auto& object : objects(map, pom.object, element, location)) {
            result_.graph.insert(rdf::Triple(subject, pom.predicate, object));
          }
        }
      }
    }
  }

 private:
  std::vector<rdf::Term> subjects(const TriplesMap& map, const json::Json& element, const std::string& location) {
    std::vector<rdf::Term> out;
    const auto& value = map.subject.value;
    if (const auto* constant = std::get_if<rdf::Term>(&value)) {
      out.push_back(*constant);
      return out;
    }
    std::vector<std::string> raw;
    if (const auto* tmpl = std::get_if<TemplateString>(&value)) {
      raw = instantiate(*tmpl, element, true);
    } else {
      raw = reference_values(element, std::get<json::PathExpr>(value));
    }
    if (raw.empty()) throw TemplateUnresolvable(map.id, location);
    for (const auto& r : raw) {
      auto iri = make_iri(r, base_);
      if (!iri) throw TemplateUnresolvable(map.id, location);
      out.push_back(*iri);
    }
    return out;
  }

  std::vector<rdf::Term> objects(const TriplesMap& map, const ObjectMap& om, const json::Json& element,
                                 const std::string& location) {
    std::vector<rdf::Term> out;
    if (const auto* constant = std::get_if<ConstantObject>(&om)) {
      out.push_back(constant->term);
    } else if (const auto* ref = std::get_if<ReferenceObject>(&om)) {
      auto values = reference_values(element, ref->path);
      if (values.empty()) result_.skipped.push_back(SkippedReference{map.id, ref->reference, location});
      for (auto& v : values) {
        if (ref->term_type == TermType::kLiteral) {
          out.push_back(make_literal(std::move(v), ref->datatype, ref->language));
        } else if (auto iri = make_iri(v, base_)) {
          out.push_back(*iri);
        } else {
          result_.skipped.push_back(SkippedReference{map.id, ref->reference, location});
        }
      }
    } else {
      const auto& tmpl = std::get<TemplateObject>(om);
      bool as_iri = tmpl.term_type == TermType::kIri;
      auto values = instantiate(tmpl.value, element, as_iri);
      if (values.empty()) result_.skipped.push_back(SkippedReference{map.id, tmpl.value.text(), location});
      for (auto& v : values) {
        if (!as_iri) {
          out.push_back(make_literal(std::move(v), tmpl.datatype, tmpl.language));
        } else if (auto iri = make_iri(v, base_)) {
          out.push_back(*iri);
        } else {
          result_.skipped.push_back(SkippedReference{map.id, tmpl.value.text(), location});
        }
      }
    }
    return out;
  }

  const rdf::Iri& base_;
  ForwardResult& result_;
};

}  // namespace

std::string percent_encode(std::string_view value) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : value) {
    bool unreserved = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' ||
                      c == '.' || c == '_' || c == '~';
    if (unreserved) {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    }
  }
  return out;
}

ForwardResult execute_forward(const std::vector<TriplesMap>& maps, const Sources& sources, const rdf::Iri& base) {
  ForwardResult result;
  Runner runner(base, result);
  for (const auto& map : maps) {
    auto it = sources.find(map.source.source_ref);
    if (it == sources.end() || it->second == nullptr) throw SourceNotFound(map.source.source_ref);
    runner.run(map, *it->second);
  }
  return result;
}

std::string format_report(const std::vector<SkippedReference>& skipped) {
  std::string out;
  for (const auto& s : skipped) {
    out += "skipped reference '" + s.reference + "' in " + s.rule + " at " + s.location + "\n";
  }
  return out;
}

}  // namespace caskbridge::rml
