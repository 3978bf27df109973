#include "caskbridge/css/mapping.hpp"

namespace caskbridge::css {

InverseOutput onto_to_aas(const rdf::Graph& graph, const SkeletonConfig& config, const RuleCorpus* corpus,
                          const std::optional<rdf::Iri>& base) {
  const RuleCorpus& rules = corpus ? *corpus : default_corpus();
  auto result = rdfex::execute_inverse(rules.inverse, graph, make_skeleton(config));
  InverseOutput out{std::move(result.document), std::move(result.warnings), {}};

  std::optional<rdf::Iri> ledger_base = base;
  if (!ledger_base) {
    auto inferred = infer_base(graph);
    ledger_base = rdf::Iri(inferred.value_or("http://example.org/aas#"));
  }
  ForwardOptions options;
  options.corpus = &rules;
  auto reprojected = aas_to_onto(out.environment, *ledger_base, options);
  out.ledger = build_loss_ledger(graph, reprojected.graph, out.environment);
  return out;
}

}  // namespace caskbridge::css
