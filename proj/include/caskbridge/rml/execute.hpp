#pragma once

#include <map>
#include <string>
#include <vector>

#include "caskbridge/rml/triples_map.hpp"

namespace caskbridge::rml {

class SourceNotFound : public Error {
 public:
  explicit SourceNotFound(const std::string& name) : Error("logical source '" + name + "' not provided"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class TemplateUnresolvable : public Error {
 public:
  TemplateUnresolvable(const std::string& rule, const std::string& location)
      : Error("triples map " + rule + ": subject template has no value at " + location),
        rule_(rule),
        location_(location) {}
  const std::string& rule() const { return rule_; }
  const std::string& location() const { return location_; }

 private:
  std::string rule_;
  std::string location_;
};

/// A reference that produced no triple because it resolved to nothing at an
/// iterator element.
struct SkippedReference {
  std::string rule;
  std::string reference;
  std::string location;
};

struct ForwardResult {
  rdf::Graph graph;
  std::vector<SkippedReference> skipped;
};

using Sources = std::map<std::string, const json::Json*>;

/// Percent-encodes everything except the RFC 3986 unreserved characters.
std::string percent_encode(std::string_view value);

/// Runs every map over its source. Template values are percent-encoded in
/// IRI position; IRIs that come out relative are prefixed with `base`.
ForwardResult execute_forward(const std::vector<TriplesMap>& maps, const Sources& sources, const rdf::Iri& base);

/// One line per skipped reference.
std::string format_report(const std::vector<SkippedReference>& skipped);

}  // namespace caskbridge::rml
