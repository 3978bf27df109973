#pragma once

#include <string>
#include <vector>

#include "caskbridge/json/value.hpp"

namespace caskbridge::css {

enum class SubmodelKind { kOther, kCapability, kControlComponent };

/// By semanticId when it names a capability or control component submodel,
/// otherwise by idShort (Capability, Capabilities, CapabilityDescription,
/// ControlComponent*).
SubmodelKind detect_kind(const json::Json& submodel);

struct SubmodelInfo {
  std::size_t index;  // position in env.submodels
  std::string id;
  std::string id_short;
  SubmodelKind kind;
};

std::vector<SubmodelInfo> classify_submodels(const json::Json& env);

struct SkeletonConfig {
  std::string aas_id{"https://example.org/aas/caskbridge"};
  std::string capability_submodel_id;         // default: aas_id + "/sm/Capabilities"
  std::string control_component_submodel_id;  // default: aas_id + "/sm/ControlComponent"
};

inline constexpr const char* kCapabilitySubmodelIdShort = "Capabilities";
inline constexpr const char* kControlComponentIdShort = "ControlComponent";

/// An environment with one AAS, a capability submodel holding an empty
/// CapabilitySet and a control component submodel holding empty Skills,
/// Interfaces and Endpoints.
json::Json make_skeleton(const SkeletonConfig& config);

}  // namespace caskbridge::css
