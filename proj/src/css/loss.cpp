#include "caskbridge/css/loss.hpp"

#include <map>
#include <set>
#include <tuple>

#include "caskbridge/css/structure.hpp"
#include "caskbridge/css/vocabulary.hpp"

namespace caskbridge::css {

namespace {

constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";

const std::vector<std::string_view>& vocabulary_namespaces() {
  static const std::vector<std::string_view> ns{kCss,
                                                kCb,
                                                kOwl,
                                                rdf::rdfs::kNs,
                                                "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
                                                "http://www.w3.org/2001/XMLSchema#"};
  return ns;
}

bool in_vocabulary(const rdf::Term& t) {
  if (!t.is_iri()) return false;
  for (auto ns : vocabulary_namespaces()) {
    if (t.value().compare(0, ns.size(), ns) == 0) return true;
  }
  return false;
}

std::string namespace_of(const std::string& iri) {
  auto hash = iri.rfind('#');
  if (hash != std::string::npos) return iri.substr(0, hash + 1);
  auto slash = iri.rfind('/');
  return slash == std::string::npos ? iri : iri.substr(0, slash + 1);
}

int row_order(const std::string& row) {
  static const std::vector<std::string> order{"Capability", "Property",     "CapabilityConstraint", "ProcessType",
                                              "Skill",      "SkillParameter", "StateMachine",       "SkillInterface"};
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] == row) return static_cast<int>(i);
  }
  return static_cast<int>(order.size());
}

std::set<rdf::Term> typed(const rdf::Graph& g, std::initializer_list<std::string_view> classes) {
  std::set<rdf::Term> out;
  for (auto cls : classes) {
    for (const auto& t : g.match(std::nullopt, rdf_type(), css_term(cls))) out.insert(t.subject);
  }
  return out;
}

class Classifier {
 public:
  explicit Classifier(const rdf::Graph& g) : g_(g) {
    processes_ = typed(g, {"Process", "ManufacturingProcess", "HandlingProcess"});
    resources_ = typed(g, {"Resource"});
    for (const auto& t : g.match(std::nullopt, css_term("provides"), std::nullopt)) resources_.insert(t.subject);
    state_machines_ = typed(g, {"StateMachine"});
    for (const auto& t : g.match(std::nullopt, css_term("behaviorConformsTo"), std::nullopt)) {
      if (!t.object.is_literal()) state_machines_.insert(t.object);
    }
    std::set<rdf::Term> stop = typed(g, {"Capability", "ProvidedCapability", "RequiredCapability", "Property",
                                         "CapabilityConstraint", "Skill", "SkillVariable", "SkillInterface"});
    stop.insert(processes_.begin(), processes_.end());
    for (const auto& sm : state_machines_) {
      std::vector<rdf::Term> queue{sm};
      owner_.emplace(sm, sm);
      while (!queue.empty()) {
        rdf::Term node = queue.back();
        queue.pop_back();
        for (const auto& t : g.match(node, std::nullopt, std::nullopt)) {
          if (t.predicate == rdf_type() || t.object.is_literal() || in_vocabulary(t.object)) continue;
          if (stop.count(t.object) || state_machines_.count(t.object)) continue;
          if (owner_.emplace(t.object, sm).second) queue.push_back(t.object);
        }
      }
    }
  }

  bool ignorable(const rdf::Triple& t) const {
    if (in_vocabulary(t.subject)) return true;
    if (t.predicate == rdf_type() && t.object == rdf::Term::iri(std::string(kOwl) + "NamedIndividual")) return true;
    return g_.contains(rdf::Triple(t.subject, rdf_type(), rdf::Term::iri(std::string(kOwl) + "Ontology")));
  }

  // (row, focus, note)
  std::tuple<std::string, rdf::Term, std::string> classify(const rdf::Triple& t) const {
    if (t.predicate == css_term("requires") || processes_.count(t.subject)) {
      return {"ProcessType", t.subject, "no AAS counterpart"};
    }
    if (processes_.count(t.object)) return {"ProcessType", t.object, "no AAS counterpart"};
    if (auto it = owner_.find(t.subject); it != owner_.end()) {
      return {"StateMachine", it->second, "only Modes and Disabled emitted"};
    }
    if (state_machines_.count(t.object)) return {"StateMachine", t.object, "only Modes and Disabled emitted"};
    if (t.predicate == rdf_type() &&
        (t.object == css_term("ProvidedCapability") || t.object == css_term("RequiredCapability"))) {
      return {"Capability", t.subject, "provided/required distinction not represented"};
    }
    if (t.predicate == css_term("provides")) return {"Capability", t.object, "provided/required distinction not represented"};
    if (resources_.count(t.subject)) return {"Capability", t.subject, "provided/required distinction not represented"};
    return {"Unmapped", t.subject, "not reproduced by the mapping rules"};
  }

  const std::set<rdf::Term>& state_machines() const { return state_machines_; }

 private:
  const rdf::Graph& g_;
  std::set<rdf::Term> processes_;
  std::set<rdf::Term> resources_;
  std::set<rdf::Term> state_machines_;
  std::map<rdf::Term, rdf::Term> owner_;  // node -> state machine it belongs to
};

Lossiness lossiness_of(const std::string& row) {
  if (row == "ProcessType") return Lossiness::kOntologyOnly;
  return Lossiness::kPartial;
}

}  // namespace

std::string to_string(Lossiness lossiness) {
  switch (lossiness) {
    case Lossiness::kLossless: return "Lossless";
    case Lossiness::kForwardOnly: return "ForwardOnly";
    case Lossiness::kInverseOnly: return "InverseOnly";
    case Lossiness::kPartial: return "Partial";
    case Lossiness::kOntologyOnly: return "OntologyOnly";
  }
  return "?";
}

const std::vector<ElementCorrespondence>& correspondences() {
  static const std::vector<ElementCorrespondence> rows{
      {"Capability",
       {"CapabilityMap"},
       {"capability", "capability-description", "required-capability"},
       Lossiness::kPartial,
       "RequiredCapability carried as CapabilityRole qualifier; ProvidedCapability and provides have no AAS "
       "counterpart"},
      {"Property",
       {"PropertyMap"},
       {"property-set", "property", "property-description", "property-value"},
       Lossiness::kLossless,
       ""},
      {"CapabilityConstraint",
       {"ConstraintMap"},
       {"condition-container", "constraint", "constraint-description"},
       Lossiness::kPartial,
       "opaque individual with description; only constraints referencing a property are emitted"},
      {"ProcessType", {}, {}, Lossiness::kOntologyOnly, "no AAS counterpart"},
      {"Skill", {"SkillMap"}, {"skill", "skill-description", "capability-skill"}, Lossiness::kLossless, ""},
      {"SkillParameter",
       {"SkillVariableMap"},
       {"parameters", "parameter", "parameter-description", "property-relationships", "property-parameter"},
       Lossiness::kLossless,
       ""},
      {"StateMachine", {"StateMachineMap"}, {"modes", "mode", "disabled"}, Lossiness::kPartial,
       "only Modes and Disabled emitted"},
      {"SkillInterface",
       {"InterfaceMap", "EndpointMap"},
       {"interface", "interface-reference", "endpoint", "endpoint-reference"},
       Lossiness::kPartial,
       "endpoints linked to every skill of their control component"},
  };
  return rows;
}

std::string LossLedger::to_text() const {
  std::string out;
  for (const auto& e : entries) {
    out += e.row + ": " + e.note + " [" + e.focus + ", " + std::to_string(e.triples) +
           (e.triples == 1 ? " triple]\n" : " triples]\n");
  }
  for (const auto& a : assumptions) out += "assumption: " + a + "\n";
  return out;
}

LossLedger build_loss_ledger(const rdf::Graph& original, const rdf::Graph& reprojected, const json::Json& environment) {
  Classifier classifier(original);
  std::map<std::tuple<int, std::string, std::string, std::string>, std::size_t> groups;
  auto key = [](const std::string& row, const rdf::Term& focus, const std::string& note) {
    std::string f = focus.is_iri() ? focus.value() : focus.str();
    return std::make_tuple(row_order(row), row, f, note);
  };
  for (const auto& t : original) {
    if (reprojected.contains(t) || classifier.ignorable(t)) continue;
    auto [row, focus, note] = classifier.classify(t);
    ++groups[key(row, focus, note)];
  }
  for (const auto& sm : classifier.state_machines()) groups.try_emplace(key("StateMachine", sm, "only Modes and Disabled emitted"), 0);
  for (const auto& t : original.match(std::nullopt, rdf_type(), css_term("RequiredCapability"))) {
    groups.try_emplace(key("Capability", t.subject, "RequiredCapability carried as CapabilityRole qualifier"), 0);
  }

  LossLedger ledger;
  for (const auto& [k, count] : groups) {
    const auto& [order, row, focus, note] = k;
    ledger.entries.push_back(LossEntry{row, lossiness_of(row), focus, count, note});
  }

  for (const auto& info : classify_submodels(environment)) {
    if (info.kind != SubmodelKind::kControlComponent) continue;
    const json::Json& sm = environment.find("submodels")->as_array()[info.index];
    const json::Json* elements = sm.find("submodelElements");
    if (!elements || !elements->is_array()) continue;
    for (const auto& element : elements->as_array()) {
      if (element.string_member("idShort") != "Endpoints") continue;
      const json::Json* endpoints = element.find("value");
      if (!endpoints || !endpoints->is_array()) continue;
      for (const auto& ep : endpoints->as_array()) {
        if (ep.string_member("modelType") != "ReferenceElement") continue;
        ledger.assumptions.push_back("endpoint " + std::string(ep.string_member("idShort")) +
                                     " linked to every skill of " + info.id_short);
      }
    }
  }
  return ledger;
}

std::optional<std::string> infer_base(const rdf::Graph& graph) {
  std::map<std::string, std::size_t> counts;
  std::set<std::string> seen;
  for (const auto& t : graph) {
    if (!t.subject.is_iri() || in_vocabulary(t.subject) || !seen.insert(t.subject.value()).second) continue;
    ++counts[namespace_of(t.subject.value())];
  }
  std::optional<std::string> best;
  std::size_t best_count = 0;
  for (const auto& [ns, count] : counts) {
    if (count > best_count) {
      best = ns;
      best_count = count;
    }
  }
  return best;
}

}  // namespace caskbridge::css
