#pragma once

#include <string>
#include <vector>

#include "caskbridge/rdf/graph.hpp"
#include "caskbridge/sparql/select.hpp"
#include "random_data.hpp"

namespace caskbridge::testing {

using Rows = std::vector<std::vector<std::string>>;

// Tries every assignment of graph terms to the query variables and keeps the
// ones under which every pattern is a triple of `g`. Rows hold the N-Triples
// forms of the projected values, deduplicated and sorted.
Rows brute_force_select(const SparqlCase& c, const rdf::Graph& g);

// The same row shape for the engine's answer.
Rows project(const std::vector<sparql::BindingSet>& rows, const std::vector<std::string>& variables);

}  // namespace caskbridge::testing
