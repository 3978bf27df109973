#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caskbridge/css/corpus.hpp"
#include "caskbridge/css/loss.hpp"
#include "caskbridge/css/structure.hpp"
#include "caskbridge/css/vocabulary.hpp"
#include "caskbridge/rml/execute.hpp"

namespace caskbridge::css {

/// A relationship or reference whose target is missing or of the wrong kind.
/// The link it would have produced is left out.
struct Diagnostic {
  std::string relationship;  // location of the relationship element
  std::string chain;
  std::string message;
};

struct ForwardOptions {
  const RuleCorpus* corpus = nullptr;  // default_corpus() when null
  std::string conformance{kDefaultConformance};
};

struct ForwardOutput {
  rdf::Graph graph;
  std::vector<Diagnostic> diagnostics;
  std::vector<rml::SkippedReference> skipped;
};

/// Forward rules per capability / control component submodel, plus the
/// links that need reference resolution or span elements. Individuals are
/// named base + idShort; a name produced by more than one submodel is
/// prefixed with "<submodel idShort>_" in each of them.
ForwardOutput aas_to_onto(const json::Json& env, const rdf::Iri& base, const ForwardOptions& options = {});

struct InverseOutput {
  json::Json environment;
  std::vector<std::string> warnings;
  LossLedger ledger;
};

/// Fresh skeleton plus every inverse rule. The ledger is computed against
/// the forward image of the result, with `base` inferred from the graph
/// when not given.
InverseOutput onto_to_aas(const rdf::Graph& graph, const SkeletonConfig& config = {},
                          const RuleCorpus* corpus = nullptr, const std::optional<rdf::Iri>& base = std::nullopt);

}  // namespace caskbridge::css
