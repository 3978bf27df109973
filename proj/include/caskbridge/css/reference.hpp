#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caskbridge/json/path.hpp"

namespace caskbridge::css {

class AmbiguousReference : public Error {
 public:
  explicit AmbiguousReference(const std::string& chain) : Error("ambiguous reference " + chain) {}
};

struct ReferenceKey {
  std::string type;
  std::string value;
};

struct AasReferenceChain {
  std::vector<ReferenceKey> keys;
};

/// Reads the `keys` of an AAS reference object. Returns an empty chain when
/// `reference` has no usable keys.
AasReferenceChain read_reference(const json::Json& reference);

/// "Submodel:Caps/SubmodelElementCollection:CapabilitySet/..." for messages.
std::string to_string(const AasReferenceChain& chain);

/// Walks the chain from the environment root. The first key must be a
/// Submodel key matching a submodel's id or idShort; the rest are idShorts
/// looked up in submodelElements / value arrays. Returns nullopt when any
/// step finds nothing; throws AmbiguousReference when a step finds more
/// than one element.
std::optional<json::PathMatch> resolve_reference(const json::Json& env, const AasReferenceChain& chain);

}  // namespace caskbridge::css
