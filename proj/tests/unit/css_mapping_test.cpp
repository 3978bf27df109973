#include <gtest/gtest.h>

#include "caskbridge/css/mapping.hpp"
#include "caskbridge/css/vocabulary.hpp"
#include "caskbridge/rdf/turtle.hpp"
#include "files.hpp"

namespace caskbridge::css {
namespace {

using caskbridge::testing::fixture;
using caskbridge::testing::read_file;

const rdf::Iri kBase("http://example.org/css#");

json::Json golden_env() { return json::parse_json(read_file(fixture("golden_env.json"))); }

rdf::Term ex(const std::string& local) { return rdf::Term::iri(kBase.str() + local); }

std::string dump(const rdf::Graph& g) {
  std::string out;
  for (const auto& t : g) out += rdf::to_string(t) + "\n";
  return out;
}

json::Json* find_element(json::Json& env, const std::string& path) {
  auto m = json::evaluate_path(env, json::compile_path(path));
  return m.empty() ? nullptr : json::navigate(env, m.front().location);
}

TEST(Forward, GoldenGraphTripleByTriple) {
  auto out = aas_to_onto(golden_env(), kBase);
  rdf::Graph expected = rdf::parse_turtle(read_file(fixture("golden_graph.ttl")));
  for (const auto& t : expected) EXPECT_TRUE(out.graph.contains(t)) << "missing " << rdf::to_string(t);
  for (const auto& t : out.graph) EXPECT_TRUE(expected.contains(t)) << "unexpected " << rdf::to_string(t);
  EXPECT_TRUE(out.diagnostics.empty());
}

TEST(Forward, OutputIsDeterministic) {
  json::Json env = golden_env();
  EXPECT_EQ(rdf::serialize_turtle(aas_to_onto(env, kBase).graph), rdf::serialize_turtle(aas_to_onto(env, kBase).graph));
}

TEST(Forward, EmptyAndUnrelatedEnvironments) {
  EXPECT_TRUE(aas_to_onto(json::parse_json("{}"), kBase).graph.empty());
  EXPECT_TRUE(aas_to_onto(json::parse_json(R"({"submodels": [{"idShort": "Nameplate", "id": "urn:n",
                                                "submodelElements": []}]})"),
                          kBase)
                  .graph.empty());
}

TEST(Forward, DanglingReferenceIsDiagnosedNotFatal) {
  json::Json env = golden_env();
  json::Json* rel = find_element(env, "$..value[?(@.idShort=='realizedBy-DrillSkill')]");
  ASSERT_NE(rel, nullptr);
  rel->find("second")->find("keys")->as_array().back() = json::parse_json(R"({"type": "SubmodelElementCollection", "value": "Ghost"})");
  auto out = aas_to_onto(env, kBase);
  ASSERT_EQ(out.diagnostics.size(), 1u);
  EXPECT_NE(out.diagnostics[0].message.find("does not resolve"), std::string::npos);
  EXPECT_NE(out.diagnostics[0].chain.find("Ghost"), std::string::npos);
  EXPECT_FALSE(out.graph.contains(rdf::Triple(ex("Drilling"), css_term("isRealizedBySkill"), ex("DrillSkill"))));
  EXPECT_EQ(out.graph.size(), 30u) << dump(out.graph);
}

TEST(Forward, WrongKindOfTargetIsDiagnosed) {
  json::Json env = golden_env();
  json::Json* rel = find_element(env, "$..value[?(@.idShort=='realizedBy-Diameter-DiameterParam')]");
  ASSERT_NE(rel, nullptr);
  // Point `first` at the capability instead of the property.
  *rel->find("first") = *find_element(env, "$..value[?(@.idShort=='realizedBy-DrillSkill')]")->find("first");
  auto out = aas_to_onto(env, kBase);
  ASSERT_EQ(out.diagnostics.size(), 1u);
  EXPECT_NE(out.diagnostics[0].message.find("must reference a"), std::string::npos);
  EXPECT_FALSE(out.graph.contains(rdf::Triple(ex("Diameter"), css_term("isRealizedBySkillParameter"), ex("DiameterParam"))));
}

TEST(Forward, RequiredCapabilityFromQualifier) {
  json::Json env = golden_env();
  json::Json* cap = find_element(env, "$..value[?(@.modelType=='Capability')]");
  cap->add_member("qualifiers", json::parse_json(R"([{"type": "CapabilityRole", "valueType": "xs:string", "value": "Required"}])"));
  auto out = aas_to_onto(env, kBase);
  EXPECT_TRUE(out.graph.contains(rdf::Triple(ex("Drilling"), rdf_type(), css_term("RequiredCapability"))));
}

TEST(Forward, ConformanceClassIsConfigurable) {
  ForwardOptions options;
  options.conformance = "http://example.org/sm#PackML";
  auto out = aas_to_onto(golden_env(), kBase, options);
  EXPECT_TRUE(out.graph.contains(
      rdf::Triple(ex("DrillSkill_StateMachine"), rdf_type(), rdf::Term::iri("http://example.org/sm#PackML"))));
  EXPECT_FALSE(out.graph.contains(
      rdf::Triple(ex("DrillSkill_StateMachine"), rdf_type(), rdf::Term::iri(std::string(kDefaultConformance)))));
}

TEST(Forward, NamesFromSeveralSubmodelsArePrefixed) {
  json::Json env = golden_env();
  json::Json copy = env.find("submodels")->as_array()[0];
  *copy.find("idShort") = json::Json("CapabilitiesB");
  *copy.find("id") = json::Json("https://example.org/ids/sm/CapabilitiesB");
  env.find("submodels")->push_back(copy);
  auto out = aas_to_onto(env, kBase);
  EXPECT_TRUE(out.graph.contains(rdf::Triple(ex("Capabilities_Drilling"), rdf_type(), css_term("Capability"))));
  EXPECT_TRUE(out.graph.contains(rdf::Triple(ex("CapabilitiesB_Drilling"), rdf_type(), css_term("Capability"))));
  EXPECT_FALSE(out.graph.contains(rdf::Triple(ex("Drilling"), rdf_type(), css_term("Capability"))));
  // The copy's references still point at the first submodel by id, so its
  // links target the first submodel's individuals.
  EXPECT_TRUE(out.graph.contains(rdf::Triple(ex("Capabilities_Drilling"), css_term("isRealizedBySkill"), ex("DrillSkill"))));
}

TEST(Forward, InterfacesOnlyServeTheirOwnControlComponent) {
  json::Json env = golden_env();
  json::Json second = json::parse_json(R"({
    "idShort": "ControlComponentB", "id": "urn:cc:b", "modelType": "Submodel",
    "semanticId": {"keys": [{"type": "GlobalReference", "value": "https://admin-shell.io/idta/ControlComponentInstance/1/0/Submodel"}]},
    "submodelElements": [
      {"idShort": "Skills", "modelType": "SubmodelElementCollection", "value": [
        {"idShort": "MillSkill", "modelType": "SubmodelElementCollection", "value": []}]},
      {"idShort": "Interfaces", "modelType": "SubmodelElementCollection", "value": [
        {"idShort": "MillInterface", "modelType": "ReferenceElement",
         "value": {"type": "ExternalReference", "keys": [{"type": "GlobalReference", "value": "opc.tcp://mill"}]}}]}]})");
  env.find("submodels")->push_back(second);
  auto out = aas_to_onto(env, kBase);
  EXPECT_TRUE(out.graph.contains(rdf::Triple(ex("MillSkill"), css_term("accessibleThrough"), ex("MillInterface"))));
  EXPECT_FALSE(out.graph.contains(rdf::Triple(ex("MillSkill"), css_term("accessibleThrough"), ex("OpcUaInterface"))));
  EXPECT_FALSE(out.graph.contains(rdf::Triple(ex("DrillSkill"), css_term("accessibleThrough"), ex("MillInterface"))));
}

TEST(Inverse, EmptyGraphGivesSkeleton) {
  SkeletonConfig config;
  config.aas_id = "urn:aas:empty";
  auto out = onto_to_aas(rdf::Graph(), config);
  EXPECT_EQ(out.environment, make_skeleton(config));
  EXPECT_TRUE(out.ledger.empty());
  EXPECT_TRUE(out.warnings.empty());
}

TEST(Inverse, SingleCapability) {
  rdf::Graph g = rdf::parse_turtle(R"(@prefix css: <http://www.w3id.org/hsu-aut/css#> .
    <http://example.org/css#Drilling> a css:Capability .)");
  auto out = onto_to_aas(g);
  auto caps = json::evaluate_path(out.environment, json::compile_path(
      "$.submodels[?(@.idShort=='Capabilities')].submodelElements[?(@.idShort=='CapabilitySet')].value[*]"));
  ASSERT_EQ(caps.size(), 1u);
  EXPECT_EQ(caps[0].value->string_member("idShort"), "CapabilityContainer_Drilling");
  const auto& inner = caps[0].value->find("value")->as_array();
  ASSERT_EQ(inner.size(), 2u);
  EXPECT_EQ(inner[0].string_member("idShort"), "Drilling");
  EXPECT_EQ(inner[0].string_member("modelType"), "Capability");
  EXPECT_EQ(inner[1].string_member("idShort"), "CapabilityRelationships");
  EXPECT_TRUE(inner[1].find("value")->as_array().empty());
  EXPECT_TRUE(out.ledger.empty()) << out.ledger.to_text();
}

TEST(Inverse, ProcessOnlyGraphLeavesSkeletonAndLogsLoss) {
  rdf::Graph g = rdf::parse_turtle(R"(@prefix css: <http://www.w3id.org/hsu-aut/css#> .
    <http://example.org/css#Assembly> a css:Process ; css:requires <http://example.org/css#Joining> .)");
  SkeletonConfig config;
  auto out = onto_to_aas(g, config);
  EXPECT_EQ(out.environment, make_skeleton(config));
  ASSERT_EQ(out.ledger.entries.size(), 1u);
  EXPECT_EQ(out.ledger.entries[0].row, "ProcessType");
  EXPECT_EQ(out.ledger.entries[0].lossiness, Lossiness::kOntologyOnly);
  EXPECT_EQ(out.ledger.entries[0].focus, "http://example.org/css#Assembly");
  EXPECT_EQ(out.ledger.entries[0].triples, 2u);
}

TEST(Inverse, GoldenGraphReprojectsToItself) {
  rdf::Graph g = rdf::parse_turtle(read_file(fixture("golden_graph.ttl")));
  auto e2 = onto_to_aas(g);
  auto g2 = aas_to_onto(e2.environment, kBase);
  EXPECT_EQ(g2.graph, g) << dump(g2.graph);
  EXPECT_TRUE(g2.diagnostics.empty());
}

TEST(Inverse, DescriptionsAndValuesCarried) {
  rdf::Graph g = rdf::parse_turtle(read_file(fixture("golden_graph.ttl")));
  json::Json env = onto_to_aas(g).environment;
  json::Json* prop = find_element(env, "$..value[?(@.idShort=='Diameter')]");
  ASSERT_NE(prop, nullptr);
  EXPECT_EQ(prop->string_member("modelType"), "Property");
  EXPECT_EQ(prop->string_member("value"), "5.5");
  EXPECT_EQ(prop->find("description")->as_array()[0].string_member("text"), "Hole diameter in mm");
  json::Json* disabled = find_element(env, "$..value[?(@.idShort=='Disabled')]");
  ASSERT_NE(disabled, nullptr);
  EXPECT_EQ(disabled->string_member("valueType"), "xs:boolean");
  EXPECT_EQ(disabled->string_member("value"), "false");
}

TEST(Inverse, CustomSubmodelIds) {
  SkeletonConfig config;
  config.aas_id = "urn:aas";
  config.capability_submodel_id = "urn:caps";
  config.control_component_submodel_id = "urn:cc";
  rdf::Graph g = rdf::parse_turtle(read_file(fixture("golden_graph.ttl")));
  json::Json env = onto_to_aas(g, config).environment;
  EXPECT_EQ(json::evaluate_path(env, json::compile_path("$.submodels[?(@.id=='urn:caps')]")).size(), 1u);
  EXPECT_EQ(json::evaluate_path(env, json::compile_path("$.submodels[?(@.id=='urn:cc')]")).size(), 1u);
  EXPECT_EQ(aas_to_onto(env, kBase).graph, g);
}

}  // namespace
}  // namespace caskbridge::css
