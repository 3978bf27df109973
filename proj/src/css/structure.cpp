#include "caskbridge/css/structure.hpp"

#include <algorithm>
#include <cctype>

namespace caskbridge::css {

namespace {

std::string lower_alnum(std::string_view text) {
  std::string out;
  for (unsigned char c : text) {
    if (std::isalnum(c)) out += static_cast<char>(std::tolower(c));
  }
  return out;
}

json::Json key(const char* type, std::string value) {
  return json::Json(json::Json::Object{{"type", type}, {"value", std::move(value)}});
}

json::Json model_reference(std::string submodel_id) {
  return json::Json(
      json::Json::Object{{"type", "ModelReference"}, {"keys", json::Json::Array{key("Submodel", std::move(submodel_id))}}});
}

json::Json empty_collection(const char* id_short) {
  return json::Json(json::Json::Object{
      {"idShort", id_short}, {"modelType", "SubmodelElementCollection"}, {"value", json::Json::array()}});
}

json::Json submodel(const char* id_short, std::string id, json::Json::Array elements) {
  return json::Json(json::Json::Object{{"idShort", id_short},
                                       {"id", std::move(id)},
                                       {"kind", "Instance"},
                                       {"modelType", "Submodel"},
                                       {"submodelElements", std::move(elements)}});
}

}  // namespace

SubmodelKind detect_kind(const json::Json& submodel) {
  if (const json::Json* semantic = submodel.find("semanticId")) {
    if (const json::Json* keys = semantic->find("keys"); keys && keys->is_array()) {
      for (const auto& k : keys->as_array()) {
        std::string value = lower_alnum(k.string_member("value"));
        if (value.find("controlcomponent") != std::string::npos) return SubmodelKind::kControlComponent;
        if (value.find("capabilit") != std::string::npos) return SubmodelKind::kCapability;
      }
    }
  }
  std::string_view id_short = submodel.string_member("idShort");
  if (id_short == "Capability" || id_short == "Capabilities" || id_short == "CapabilityDescription") {
    return SubmodelKind::kCapability;
  }
  if (id_short.substr(0, 16) == "ControlComponent") return SubmodelKind::kControlComponent;
  return SubmodelKind::kOther;
}

std::vector<SubmodelInfo> classify_submodels(const json::Json& env) {
  std::vector<SubmodelInfo> out;
  const json::Json* submodels = env.find("submodels");
  if (!submodels || !submodels->is_array()) return out;
  const auto& list = submodels->as_array();
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(SubmodelInfo{i, std::string(list[i].string_member("id")), std::string(list[i].string_member("idShort")),
                               detect_kind(list[i])});
  }
  return out;
}

json::Json make_skeleton(const SkeletonConfig& config) {
  std::string cap_id =
      config.capability_submodel_id.empty() ? config.aas_id + "/sm/Capabilities" : config.capability_submodel_id;
  std::string cc_id = config.control_component_submodel_id.empty() ? config.aas_id + "/sm/ControlComponent"
                                                                   : config.control_component_submodel_id;
  json::Json shell(json::Json::Object{
      {"idShort", "AAS"},
      {"id", config.aas_id},
      {"modelType", "AssetAdministrationShell"},
      {"assetInformation", json::Json(json::Json::Object{{"assetKind", "Instance"}})},
      {"submodels", json::Json::Array{model_reference(cap_id), model_reference(cc_id)}}});
  return json::Json(json::Json::Object{
      {"assetAdministrationShells", json::Json::Array{std::move(shell)}},
      {"submodels",
       json::Json::Array{submodel(kCapabilitySubmodelIdShort, cap_id, {empty_collection("CapabilitySet")}),
                         submodel(kControlComponentIdShort, cc_id,
                                  {empty_collection("Skills"), empty_collection("Interfaces"),
                                   empty_collection("Endpoints")})}},
      {"conceptDescriptions", json::Json::array()}});
}

}  // namespace caskbridge::css
