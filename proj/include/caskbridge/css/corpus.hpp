#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "caskbridge/rdfex/extraction.hpp"
#include "caskbridge/rml/triples_map.hpp"

namespace caskbridge::css {

inline constexpr std::string_view kCapabilitySource = "CapabilitySubmodel";
inline constexpr std::string_view kControlComponentSource = "ControlComponentSubmodel";

class CorpusError : public Error {
 public:
  using Error::Error;
};

/// Forward (Turtle) and inverse (JSON) rules, parsed.
struct RuleCorpus {
  std::string origin;  // directory, or "embedded"
  std::vector<rml::TriplesMap> forward;
  std::vector<rdfex::ExtractionRule> inverse;
};

std::string_view embedded_forward_rules();
std::string_view embedded_inverse_rules();

/// Parses both rule texts. Errors from either parser propagate with the
/// file name prefixed; forward maps must read one of the two known sources.
RuleCorpus parse_corpus(std::string_view forward_ttl, std::string_view inverse_json, std::string origin);

/// Reads forward.ttl and inverse.json from `dir`.
RuleCorpus load_corpus(const std::filesystem::path& dir);

/// The rules compiled into the library, parsed once.
const RuleCorpus& default_corpus();

}  // namespace caskbridge::css
