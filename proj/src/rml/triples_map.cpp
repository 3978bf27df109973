#include <set>

#include "caskbridge/rml/triples_map.hpp"

namespace caskbridge::rml {

namespace {

rdf::Term rr(std::string_view local) { return rdf::Term::iri(std::string(vocab::kRr) + std::string(local)); }
rdf::Term rml(std::string_view local) { return rdf::Term::iri(std::string(vocab::kRml) + std::string(local)); }
rdf::Term rdf_type() { return rdf::Term::iri(std::string(rdf::rdfns::kType)); }

std::string node_id(const rdf::Term& node) { return node.is_iri() ? node.value() : node.str(); }

class RuleReader {
 public:
  explicit RuleReader(const rdf::Graph& g) : g_(g) {}

  std::vector<rdf::Term> objects(const rdf::Term& node, const rdf::Term& predicate) const {
    std::vector<rdf::Term> out;
    for (const auto& t : g_.match(node, predicate, std::nullopt)) out.push_back(t.object);
    return out;
  }

  std::optional<rdf::Term> single(const rdf::Term& node, const rdf::Term& predicate, const std::string& rule) const {
    auto values = objects(node, predicate);
    if (values.empty()) return std::nullopt;
    if (values.size() > 1) throw InvalidRule("triples map " + rule + ": more than one " + predicate.str());
    return values.front();
  }

  std::optional<std::string> single_string(const rdf::Term& node, const rdf::Term& predicate,
                                           const std::string& rule) const {
    auto value = single(node, predicate, rule);
    if (!value) return std::nullopt;
    if (value->is_blank()) throw InvalidRule("triples map " + rule + ": " + predicate.str() + " must not be a blank node");
    return value->value();
  }

  TriplesMap read(const rdf::Term& node) const {
    TriplesMap map;
    map.id = node_id(node);
    map.source = logical_source(node, map.id);
    map.subject = subject_map(node, map.id);
    for (const auto& pom : objects(node, rr("predicateObjectMap"))) read_pom(pom, map);
    return map;
  }

 private:
  LogicalSource logical_source(const rdf::Term& node, const std::string& rule) const {
    auto ls = single(node, rml("logicalSource"), rule);
    if (!ls) throw MissingLogicalSource(rule);
    LogicalSource out;
    auto source = single_string(*ls, rml("source"), rule);
    if (!source) throw InvalidRule("triples map " + rule + ": logical source has no rml:source");
    out.source_ref = *source;
    if (auto formulation = single_string(*ls, rml("referenceFormulation"), rule)) {
      if (*formulation != std::string(vocab::kQl) + "JSONPath") {
        throw InvalidRule("triples map " + rule + ": unsupported reference formulation " + *formulation);
      }
    }
    std::string iterator = single_string(*ls, rml("iterator"), rule).value_or("$");
    try {
      out.iterator = json::compile_path(iterator);
    } catch (const Error& e) {
      throw InvalidRule("triples map " + rule + ": iterator \"" + iterator + "\": " + e.what());
    }
    return out;
  }

  SubjectMap subject_map(const rdf::Term& node, const std::string& rule) const {
    SubjectMap out;
    if (auto constant = single(node, rr("subject"), rule)) {
      out.value = *constant;
      return out;
    }
    auto sm = single(node, rr("subjectMap"), rule);
    if (!sm) throw MissingSubjectMap(rule);
    if (auto tmpl = single_string(*sm, rr("template"), rule)) {
      out.value = TemplateString::parse(*tmpl, rule);
    } else if (auto constant = single(*sm, rr("constant"), rule)) {
      if (constant->is_literal()) throw InvalidRule("triples map " + rule + ": literal subject constant");
      out.value = *constant;
    } else if (auto reference = single_string(*sm, rml("reference"), rule)) {
      out.reference = *reference;
      try {
        out.value = compile_reference(*reference);
      } catch (const Error& e) {
        throw InvalidRule("triples map " + rule + ": reference \"" + *reference + "\": " + e.what());
      }
    } else {
      throw InvalidRule("triples map " + rule + ": subject map needs rr:template, rr:constant or rml:reference");
    }
    for (const auto& cls : objects(*sm, rr("class"))) {
      if (!cls.is_iri()) throw InvalidRule("triples map " + rule + ": rr:class must be an IRI");
      out.classes.emplace_back(cls.value());
    }
    return out;
  }

  TermType term_type(const rdf::Term& node, const std::string& rule, TermType fallback) const {
    auto tt = single_string(node, rr("termType"), rule);
    if (!tt) return fallback;
    if (*tt == std::string(vocab::kRr) + "IRI") return TermType::kIri;
    if (*tt == std::string(vocab::kRr) + "Literal") return TermType::kLiteral;
    if (*tt == std::string(vocab::kRr) + "BlankNode") return TermType::kBlankNode;
    throw InvalidRule("triples map " + rule + ": unknown term type " + *tt);
  }

  ObjectMap object_map(const rdf::Term& om, const std::string& rule) const {
    if (!objects(om, rr("parentTriplesMap")).empty()) {
      throw InvalidRule("triples map " + rule + ": referencing object maps (joins) are not supported");
    }
    std::optional<rdf::Iri> datatype;
    if (auto dt = single_string(om, rr("datatype"), rule)) datatype = rdf::Iri(*dt);
    std::string language = single_string(om, rr("language"), rule).value_or("");
    if (!language.empty() && !rdf::is_language_tag(language)) {
      throw InvalidRule("triples map " + rule + ": malformed language tag '" + language + "'");
    }
    if (auto constant = single(om, rr("constant"), rule)) return ConstantObject{*constant};
    if (auto reference = single_string(om, rml("reference"), rule)) {
      ReferenceObject out;
      out.reference = *reference;
      try {
        out.path = compile_reference(*reference);
      } catch (const Error& e) {
        throw InvalidRule("triples map " + rule + ": reference \"" + *reference + "\": " + e.what());
      }
      out.datatype = datatype;
      out.language = language;
      out.term_type = term_type(om, rule, TermType::kLiteral);
      return out;
    }
    if (auto tmpl = single_string(om, rr("template"), rule)) {
      TemplateObject out{TemplateString::parse(*tmpl, rule), term_type(om, rule, TermType::kIri), datatype, language};
      if (out.term_type == TermType::kBlankNode) {
        throw InvalidRule("triples map " + rule + ": blank node object templates are not supported");
      }
      return out;
    }
    throw InvalidRule("triples map " + rule + ": object map needs rr:constant, rml:reference or rr:template");
  }

  void read_pom(const rdf::Term& pom, TriplesMap& map) const {
    std::vector<rdf::Iri> predicates;
    for (const auto& p : objects(pom, rr("predicate"))) {
      if (!p.is_iri()) throw InvalidRule("triples map " + map.id + ": rr:predicate must be an IRI");
      predicates.emplace_back(p.value());
    }
    for (const auto& pm : objects(pom, rr("predicateMap"))) {
      auto constant = single(pm, rr("constant"), map.id);
      if (!constant || !constant->is_iri()) {
        throw InvalidRule("triples map " + map.id + ": predicate maps must be IRI constants");
      }
      predicates.emplace_back(constant->value());
    }
    std::vector<ObjectMap> object_maps;
    for (const auto& o : objects(pom, rr("object"))) object_maps.push_back(ConstantObject{o});
    for (const auto& om : objects(pom, rr("objectMap"))) object_maps.push_back(object_map(om, map.id));
    if (predicates.empty()) throw InvalidRule("triples map " + map.id + ": predicate-object map without predicate");
    if (object_maps.empty()) throw InvalidRule("triples map " + map.id + ": predicate-object map without object");
    for (const auto& p : predicates) {
      for (const auto& o : object_maps) map.predicate_objects.push_back(PredicateObjectMap{p, o});
    }
  }

  const rdf::Graph& g_;
};

}  // namespace

std::vector<TriplesMap> parse_triples_maps(const rdf::Graph& rules) {
  std::set<rdf::Term> nodes;
  for (const auto& t : rules.match(std::nullopt, rdf_type(), rr("TriplesMap"))) nodes.insert(t.subject);
  for (const auto& t : rules.match(std::nullopt, rml("logicalSource"), std::nullopt)) nodes.insert(t.subject);
  for (const auto& t : rules.match(std::nullopt, rr("subjectMap"), std::nullopt)) nodes.insert(t.subject);
  RuleReader reader(rules);
  std::vector<TriplesMap> out;
  for (const auto& node : nodes) out.push_back(reader.read(node));
  return out;
}

}  // namespace caskbridge::rml
