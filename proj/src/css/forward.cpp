#include <cctype>
#include <map>
#include <set>

#include "caskbridge/css/mapping.hpp"
#include "caskbridge/css/reference.hpp"
#include "caskbridge/sparql/select.hpp"

namespace caskbridge::css {

namespace {

enum class ElementKind { kCapability, kProperty, kSkill, kParameter };

const char* kind_name(ElementKind kind) {
  switch (kind) {
    case ElementKind::kCapability: return "Capability";
    case ElementKind::kProperty: return "Property";
    case ElementKind::kSkill: return "Skill";
    case ElementKind::kParameter: return "SkillVariable";
  }
  return "?";
}

struct Node {
  json::Location location;
  const json::Json* value;
};

json::Location child_location(const json::Location& parent, const char* member, std::size_t index) {
  json::Location out = parent;
  out.emplace_back(std::string(member));
  out.emplace_back(index);
  return out;
}

// Elements of the array `member` of `parent` (e.g. "value"), optionally
// filtered by idShort or modelType.
std::vector<Node> children(const Node& parent, const char* member) {
  std::vector<Node> out;
  const json::Json* arr = parent.value->find(member);
  if (!arr || !arr->is_array()) return out;
  for (std::size_t i = 0; i < arr->as_array().size(); ++i) {
    out.push_back(Node{child_location(parent.location, member, i), &arr->as_array()[i]});
  }
  return out;
}

std::vector<Node> with_id_short(const std::vector<Node>& nodes, std::string_view id_short) {
  std::vector<Node> out;
  for (const auto& n : nodes) {
    if (n.value->string_member("idShort") == id_short) out.push_back(n);
  }
  return out;
}

std::vector<Node> with_model_type(const std::vector<Node>& nodes, std::string_view model_type) {
  std::vector<Node> out;
  for (const auto& n : nodes) {
    if (n.value->string_member("modelType") == model_type) out.push_back(n);
  }
  return out;
}

// Children of every named collection below `parent`.
std::vector<Node> inside(const std::vector<Node>& parents, std::string_view id_short, const char* member = "value") {
  std::vector<Node> out;
  for (const auto& p : parents) {
    for (const auto& c : with_id_short(children(p, member), id_short)) {
      auto items = children(c, "value");
      out.insert(out.end(), items.begin(), items.end());
    }
  }
  return out;
}

bool is_required(const json::Json& capability) {
  const json::Json* qualifiers = capability.find("qualifiers");
  if (!qualifiers || !qualifiers->is_array()) return false;
  for (const auto& q : qualifiers->as_array()) {
    if (q.string_member("type") != "CapabilityRole") continue;
    std::string value(q.string_member("value"));
    for (auto& c : value) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (value == "required") return true;
  }
  return false;
}

class Resolver {
 public:
  Resolver(const json::Json& env, const rdf::Iri& base, ForwardOutput& out) : env_(env), base_(base), out_(out) {}

  void set_names(std::vector<std::map<std::string, std::string>> renames) { renames_ = std::move(renames); }

  std::string name(std::size_t submodel, std::string_view id_short) const {
    std::string iri = base_.str() + rml::percent_encode(id_short);
    const auto& rename = renames_[submodel];
    auto it = rename.find(iri);
    return it == rename.end() ? iri : it->second;
  }

  void index(const std::vector<SubmodelInfo>& submodels) {
    for (std::size_t s = 0; s < submodels.size(); ++s) {
      Node sm = submodel_node(submodels[s]);
      if (submodels[s].kind == SubmodelKind::kCapability) {
        for (const auto& container : inside({sm}, "CapabilitySet", "submodelElements")) {
          for (const auto& cap : with_model_type(children(container, "value"), "Capability")) add(s, cap, ElementKind::kCapability);
          for (const auto& pc : inside({container}, "PropertySet")) {
            for (const auto& prop : with_model_type(children(pc, "value"), "Property")) add(s, prop, ElementKind::kProperty);
          }
        }
      } else if (submodels[s].kind == SubmodelKind::kControlComponent) {
        for (const auto& skill : skills(sm)) {
          add(s, skill, ElementKind::kSkill);
          for (const auto& param : inside({skill}, "Parameters")) add(s, param, ElementKind::kParameter);
        }
      }
    }
  }

  void link(const std::vector<SubmodelInfo>& submodels) {
    for (std::size_t s = 0; s < submodels.size(); ++s) {
      Node sm = submodel_node(submodels[s]);
      if (submodels[s].kind == SubmodelKind::kCapability) {
        for (const auto& container : inside({sm}, "CapabilitySet", "submodelElements")) link_container(s, container);
      } else if (submodels[s].kind == SubmodelKind::kControlComponent) {
        link_interfaces(s, sm);
      }
    }
  }

 private:
  Node submodel_node(const SubmodelInfo& info) const {
    const auto& list = env_.find("submodels")->as_array();
    return Node{json::Location{std::string("submodels"), info.index}, &list[info.index]};
  }

  static std::vector<Node> skills(const Node& sm) {
    return with_model_type(inside({sm}, "Skills", "submodelElements"), "SubmodelElementCollection");
  }

  void add(std::size_t submodel, const Node& node, ElementKind kind) {
    index_[json::to_string(node.location)] = {kind, name(submodel, node.value->string_member("idShort"))};
  }

  void emit(const std::string& s, std::string_view p, const std::string& o) {
    out_.graph.insert(rdf::Triple(rdf::Term::iri(s), css_term(p), rdf::Term::iri(o)));
  }

  void diagnose(const Node& relationship, const std::string& chain, const std::string& message) {
    out_.diagnostics.push_back(Diagnostic{json::to_string(relationship.location), chain, message});
  }

  // IRI and kind of the element `member` ("first"/"second") points at, or
  // nullopt with a diagnostic.
  std::optional<std::pair<ElementKind, std::string>> target(const Node& rel, const char* member) {
    const json::Json* ref = rel.value->find(member);
    if (!ref) {
      diagnose(rel, "", std::string("relationship has no '") + member + "'");
      return std::nullopt;
    }
    AasReferenceChain chain = read_reference(*ref);
    std::string text = to_string(chain);
    std::optional<json::PathMatch> hit;
    try {
      hit = resolve_reference(env_, chain);
    } catch (const AmbiguousReference& e) {
      diagnose(rel, text, e.what());
      return std::nullopt;
    }
    if (!hit) {
      diagnose(rel, text, std::string("'") + member + "' does not resolve to an element");
      return std::nullopt;
    }
    auto it = index_.find(json::to_string(hit->location));
    if (it == index_.end()) {
      diagnose(rel, text, std::string("'") + member + "' resolves to an element that is not mapped");
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<std::string> expect(const Node& rel, const char* member, ElementKind kind) {
    auto t = target(rel, member);
    if (!t) return std::nullopt;
    if (t->first != kind) {
      diagnose(rel, to_string(read_reference(*rel.value->find(member))),
               std::string("'") + member + "' must reference a " + kind_name(kind) + ", found " +
                   kind_name(t->first));
      return std::nullopt;
    }
    return t->second;
  }

  void link_container(std::size_t s, const Node& container) {
    auto items = children(container, "value");
    std::vector<std::string> caps;
    for (const auto& cap : with_model_type(items, "Capability")) {
      caps.push_back(name(s, cap.value->string_member("idShort")));
      if (is_required(*cap.value)) {
        out_.graph.insert(rdf::Triple(rdf::Term::iri(caps.back()), rdf_type(), css_term("RequiredCapability")));
      }
    }
    if (caps.empty()) return;

    for (const auto& property_set : with_id_short(items, "PropertySet")) {
      auto set_items = children(property_set, "value");
      for (const auto& pc : set_items) {
        for (const auto& prop : with_model_type(children(pc, "value"), "Property")) {
          for (const auto& cap : caps) emit(name(s, prop.value->string_member("idShort")), "isSpecifiedBy", cap);
        }
      }
      for (const auto& rel : with_model_type(inside({property_set}, "PropertyRelationships"), "RelationshipElement")) {
        auto prop = expect(rel, "first", ElementKind::kProperty);
        auto param = expect(rel, "second", ElementKind::kParameter);
        if (prop && param) emit(*prop, "isRealizedBySkillParameter", *param);
      }
    }

    for (const auto& relationships : with_id_short(items, "CapabilityRelationships")) {
      auto rel_items = children(relationships, "value");
      for (const auto& rel : with_model_type(rel_items, "RelationshipElement")) {
        auto cap = expect(rel, "first", ElementKind::kCapability);
        auto skill = expect(rel, "second", ElementKind::kSkill);
        if (cap && skill) emit(*cap, "isRealizedBySkill", *skill);
      }
      for (const auto& rel : with_model_type(inside({relationships}, "ConditionContainer"), "RelationshipElement")) {
        std::string constraint = name(s, rel.value->string_member("idShort"));
        for (const auto& cap : caps) emit(cap, "isRestrictedBy", constraint);
        for (const char* member : {"first", "second"}) {
          auto t = target(rel, member);
          if (t && t->first == ElementKind::kProperty) emit(t->second, "references", constraint);
          if (t && t->first != ElementKind::kProperty && t->first != ElementKind::kCapability) {
            diagnose(rel, to_string(read_reference(*rel.value->find(member))),
                     std::string("constraint '") + member + "' must reference a Capability or Property");
          }
        }
      }
    }
  }

  void link_interfaces(std::size_t s, const Node& sm) {
    std::vector<std::string> interfaces;
    for (const char* list : {"Interfaces", "Endpoints"}) {
      for (const auto& ref : with_model_type(inside({sm}, list, "submodelElements"), "ReferenceElement")) {
        interfaces.push_back(name(s, ref.value->string_member("idShort")));
      }
    }
    for (const auto& skill : skills(sm)) {
      std::string skill_iri = name(s, skill.value->string_member("idShort"));
      for (const auto& iface : interfaces) emit(skill_iri, "accessibleThrough", iface);
    }
  }

  const json::Json& env_;
  const rdf::Iri& base_;
  ForwardOutput& out_;
  std::vector<std::map<std::string, std::string>> renames_;
  std::map<std::string, std::pair<ElementKind, std::string>> index_;
};

rdf::Term renamed(const rdf::Term& t, const std::map<std::string, std::string>& rename) {
  if (!t.is_iri()) return t;
  auto it = rename.find(t.value());
  return it == rename.end() ? t : rdf::Term::iri(it->second);
}

}  // namespace

ForwardOutput aas_to_onto(const json::Json& env, const rdf::Iri& base, const ForwardOptions& options) {
  const RuleCorpus& corpus = options.corpus ? *options.corpus : default_corpus();
  ForwardOutput out;
  std::vector<SubmodelInfo> submodels;
  for (auto& info : classify_submodels(env)) {
    if (info.kind != SubmodelKind::kOther) submodels.push_back(std::move(info));
  }
  const json::Json::Array* list = submodels.empty() ? nullptr : &env.find("submodels")->as_array();

  std::vector<rdf::Graph> graphs;
  std::map<std::string, std::size_t> producers;  // subject IRI -> number of submodels
  for (const auto& info : submodels) {
    std::string source(info.kind == SubmodelKind::kCapability ? kCapabilitySource : kControlComponentSource);
    std::vector<rml::TriplesMap> maps;
    for (const auto& m : corpus.forward) {
      if (m.source.source_ref == source) maps.push_back(m);
    }
    auto result = rml::execute_forward(maps, rml::Sources{{source, &(*list)[info.index]}}, base);
    out.skipped.insert(out.skipped.end(), result.skipped.begin(), result.skipped.end());
    std::set<std::string> subjects;
    for (const auto& t : result.graph) {
      if (t.subject.is_iri() && t.subject.value().compare(0, base.str().size(), base.str()) == 0) {
        subjects.insert(t.subject.value());
      }
    }
    for (const auto& s : subjects) ++producers[s];
    graphs.push_back(std::move(result.graph));
  }

  std::vector<std::map<std::string, std::string>> renames(submodels.size());
  for (std::size_t s = 0; s < submodels.size(); ++s) {
    std::string prefix = base.str() + rml::percent_encode(submodels[s].id_short + "_");
    for (const auto& [iri, count] : producers) {
      if (count > 1) renames[s][iri] = prefix + iri.substr(base.str().size());
    }
    for (const auto& t : graphs[s]) {
      out.graph.insert(rdf::Triple(renamed(t.subject, renames[s]), t.predicate, renamed(t.object, renames[s])));
    }
  }

  Resolver resolver(env, base, out);
  resolver.set_names(std::move(renames));
  resolver.index(submodels);
  resolver.link(submodels);

  rdf::Term conformance = rdf::Term::iri(options.conformance);
  for (const auto& t : out.graph.match(std::nullopt, rdf_type(), css_term("StateMachine"))) {
    out.graph.insert(rdf::Triple(t.subject, rdf_type(), conformance));
  }
  auto exposes = sparql::parse_query("PREFIX css: <" + std::string(kCss) +
                                     ">\nSELECT ?i ?sm WHERE { ?s css:accessibleThrough ?i ; css:behaviorConformsTo ?sm . }");
  for (const auto& row : sparql::evaluate_select(exposes, out.graph)) {
    out.graph.insert(rdf::Triple(row.at("i"), css_term("exposesStateMachine"), row.at("sm")));
  }

  out.graph.set_prefix("css", std::string(kCss));
  out.graph.set_prefix("cb", std::string(kCb));
  out.graph.set_prefix("rdfs", std::string(rdf::rdfs::kNs));
  out.graph.set_prefix("xsd", "http://www.w3.org/2001/XMLSchema#");
  out.graph.set_prefix("ex", base.str());
  return out;
}

}  // namespace caskbridge::css
