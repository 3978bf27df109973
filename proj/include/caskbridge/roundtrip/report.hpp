#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caskbridge/css/mapping.hpp"
#include "caskbridge/roundtrip/diff.hpp"

namespace caskbridge::roundtrip {

struct RoundtripOptions {
  rdf::Iri base{"http://example.org/aas#"};
  css::SkeletonConfig skeleton;
  const css::RuleCorpus* corpus = nullptr;
  std::string conformance{css::kDefaultConformance};
};

struct RoundtripReport {
  std::size_t g1_size = 0;
  std::size_t g2_size = 0;
  GraphDiff diff;
  css::LossLedger ledger;
  std::vector<css::Diagnostic> diagnostics;  // from both forward passes
  std::vector<std::string> warnings;         // from the inverse pass
  bool ok() const { return diff.empty(); }
};

/// G1 = forward(env), E2 = inverse(G1), G2 = forward(E2); the report holds
/// diff(G1, G2) and the loss ledger of G1 against G2.
RoundtripReport check_roundtrip(const json::Json& env, const RoundtripOptions& options = {});

json::Json report_to_json(const RoundtripReport& report);
std::string report_to_text(const RoundtripReport& report);

}  // namespace caskbridge::roundtrip
