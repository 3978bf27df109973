#pragma once

#include <string>
#include <string_view>

#include "caskbridge/rdf/term.hpp"

namespace caskbridge::css {

inline constexpr std::string_view kCss = "http://www.w3id.org/hsu-aut/css#";
// Terms this library adds for AAS detail the ontology has no slot for.
inline constexpr std::string_view kCb = "http://www.w3id.org/caskbridge/aas#";
inline constexpr std::string_view kDefaultConformance = "http://www.w3id.org/hsu-aut/ISA88#ISA88StateMachine";

inline rdf::Term css_term(std::string_view local) { return rdf::Term::iri(std::string(kCss) + std::string(local)); }
inline rdf::Term cb_term(std::string_view local) { return rdf::Term::iri(std::string(kCb) + std::string(local)); }
inline rdf::Term rdf_type() { return rdf::Term::iri(std::string(rdf::rdfns::kType)); }

}  // namespace caskbridge::css
