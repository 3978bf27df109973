#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caskbridge/json/value.hpp"
#include "caskbridge/rdf/graph.hpp"

namespace caskbridge::css {

enum class Lossiness { kLossless, kForwardOnly, kInverseOnly, kPartial, kOntologyOnly };

std::string to_string(Lossiness lossiness);

/// One row of the element comparison between the ontology and the AAS
/// submodels, with the rules that implement it.
struct ElementCorrespondence {
  std::string element;
  std::vector<std::string> forward_rules;  // triples map local names
  std::vector<std::string> inverse_rules;  // inverse rule ids
  Lossiness lossiness;
  std::string note;
};

const std::vector<ElementCorrespondence>& correspondences();

struct LossEntry {
  std::string row;  // element name, or "Unmapped"
  Lossiness lossiness;
  std::string focus;  // IRI of the individual concerned
  std::size_t triples = 0;
  std::string note;
};

struct LossLedger {
  std::vector<LossEntry> entries;
  std::vector<std::string> assumptions;

  bool empty() const { return entries.empty() && assumptions.empty(); }
  /// "<row>: <note> [<focus>, <n> triples]" per entry, then
  /// "assumption: <text>" per assumption.
  std::string to_text() const;
};

/// Classifies the triples of `original` missing from `reprojected` (the
/// forward image of the generated environment) by element row, and adds the
/// documented partial mappings: every StateMachine and every
/// RequiredCapability individual of `original`. `environment` is scanned
/// for endpoints, whose linking to skills is an assumption.
LossLedger build_loss_ledger(const rdf::Graph& original, const rdf::Graph& reprojected, const json::Json& environment);

/// Namespace shared by most individuals: the subject IRI up to and including
/// its last '#', or last '/' when there is no '#'. Vocabulary namespaces are
/// ignored; ties go to the smallest namespace.
std::optional<std::string> infer_base(const rdf::Graph& graph);

}  // namespace caskbridge::css
