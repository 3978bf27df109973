#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "caskbridge/rdf/term.hpp"

namespace caskbridge::rdf {

/// A set of triples plus the prefix map it was read with (or should be
/// written with). Equality compares triples only; prefixes are presentation.
///
/// Reads through const member functions are safe from any number of threads.
class Graph {
 public:
  using TripleSet = std::set<Triple, std::less<>>;
  using const_iterator = TripleSet::const_iterator;

  Graph() = default;
  Graph(const Graph& other);
  Graph& operator=(const Graph& other);
  Graph(Graph&&) noexcept = default;
  Graph& operator=(Graph&&) noexcept = default;

  /// Returns false if the triple was already present.
  bool insert(Triple triple);
  void insert_all(const Graph& other);
  bool contains(const Triple& triple) const { return triples_.count(triple) != 0; }

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  const_iterator begin() const { return triples_.begin(); }
  const_iterator end() const { return triples_.end(); }

  /// All triples agreeing with every given position, in sorted order.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const;

  /// Declares or rebinds a prefix label.
  void set_prefix(const std::string& label, const std::string& ns) { prefixes_[label] = ns; }
  const std::map<std::string, std::string>& prefixes() const { return prefixes_; }

  /// Every distinct IRI, blank node and literal occurring in the graph.
  std::set<Term> terms() const;
  bool has_blank_nodes() const;

  /// A blank node label ("bN") not yet used in this graph.
  std::string fresh_blank_label() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.triples_ == b.triples_; }

 private:
  TripleSet triples_;
  std::map<std::string, std::string> prefixes_;
  // Secondary indexes keyed by term string form. Set nodes never move, so the
  // pointers stay valid for the graph's lifetime.
  std::map<std::string, std::vector<const Triple*>> by_predicate_;
  std::map<std::string, std::vector<const Triple*>> by_object_;
};

/// True if a bijection between the blank nodes of `a` and `b` maps one triple
/// set onto the other.
bool isomorphic(const Graph& a, const Graph& b);

/// Relabels blank nodes to a canonical scheme derived from their structural
/// position so that isomorphic graphs usually receive identical labels.
/// Automorphic blank nodes are ordered arbitrarily but deterministically.
Graph canonicalize_blank_nodes(const Graph& g);

/// Replaces each blank node with an IRI "<base>bN", numbered in sorted
/// order of the original labels.
Graph skolemize(const Graph& g, const std::string& base);

}  // namespace caskbridge::rdf
