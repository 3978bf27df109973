#include "caskbridge/rdf/graph.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace caskbridge::rdf {

namespace {

// Heterogeneous key for locating the first triple of a subject.
struct SubjectProbe {
  const Term& subject;
};
bool operator<(const Triple& t, const SubjectProbe& p) { return t.subject < p.subject; }

}  // namespace

Graph::Graph(const Graph& other) : prefixes_(other.prefixes_) {
  for (const auto& t : other.triples_) insert(t);
}

Graph& Graph::operator=(const Graph& other) {
  if (this != &other) {
    Graph copy(other);
    *this = std::move(copy);
  }
  return *this;
}

bool Graph::insert(Triple triple) {
  auto [it, inserted] = triples_.insert(std::move(triple));
  if (inserted) {
    by_predicate_[it->predicate.str()].push_back(&*it);
    by_object_[it->object.str()].push_back(&*it);
  }
  return inserted;
}

void Graph::insert_all(const Graph& other) {
  for (const auto& t : other) insert(t);
  for (const auto& [label, ns] : other.prefixes()) prefixes_.try_emplace(label, ns);
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  auto agrees = [&](const Triple& t) {
    return (!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o);
  };
  std::vector<Triple> out;
  if (s) {
    // Triples are ordered by subject first, so the subject's triples are one range.
    for (auto it = triples_.lower_bound(SubjectProbe{*s});
         it != triples_.end() && it->subject == *s; ++it) {
      if (agrees(*it)) out.push_back(*it);
    }
    return out;
  }
  const std::vector<const Triple*>* candidates = nullptr;
  if (o) {
    auto it = by_object_.find(o->str());
    if (it == by_object_.end()) return out;
    candidates = &it->second;
  }
  if (p) {
    auto it = by_predicate_.find(p->str());
    if (it == by_predicate_.end()) return out;
    if (!candidates || it->second.size() < candidates->size()) candidates = &it->second;
  }
  if (!candidates) return {triples_.begin(), triples_.end()};
  for (const Triple* t : *candidates) {
    if (agrees(*t)) out.push_back(*t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<Term> Graph::terms() const {
  std::set<Term> out;
  for (const auto& t : triples_) {
    out.insert(t.subject);
    out.insert(t.predicate);
    out.insert(t.object);
  }
  return out;
}

bool Graph::has_blank_nodes() const {
  return std::any_of(triples_.begin(), triples_.end(),
                     [](const Triple& t) { return t.subject.is_blank() || t.object.is_blank(); });
}

std::string Graph::fresh_blank_label() const {
  std::size_t next = 0;
  for (const auto& t : triples_) {
    for (const Term* term : {&t.subject, &t.object}) {
      const auto& v = term->value();
      if (term->is_blank() && v.size() > 1 && v[0] == 'b' &&
          std::all_of(v.begin() + 1, v.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        next = std::max(next, static_cast<std::size_t>(std::stoull(v.substr(1))) + 1);
      }
    }
  }
  return "b" + std::to_string(next);
}

namespace {

// Colour refinement over blank nodes. A colour is a hash of the node's
// neighbourhood where other blank nodes contribute their previous colour.
using Colours = std::map<std::string, std::size_t>;

Colours refine(const Graph& g) {
  Colours colours;
  for (const auto& t : g) {
    if (t.subject.is_blank()) colours[t.subject.value()] = 0;
    if (t.object.is_blank()) colours[t.object.value()] = 0;
  }
  std::hash<std::string> hasher;
  auto count_classes = [](const Colours& c) {
    std::set<std::size_t> s;
    for (const auto& [_, v] : c) s.insert(v);
    return s.size();
  };
  std::size_t classes = count_classes(colours);
  for (std::size_t round = 0; round <= colours.size(); ++round) {
    std::map<std::string, std::vector<std::string>> signature;
    auto name = [&](const Term& term) {
      return term.is_blank() ? "#" + std::to_string(colours.at(term.value())) : term.str();
    };
    for (const auto& t : g) {
      if (t.subject.is_blank()) {
        signature[t.subject.value()].push_back("+" + t.predicate.str() + " " + name(t.object));
      }
      if (t.object.is_blank()) {
        signature[t.object.value()].push_back("-" + t.predicate.str() + " " + name(t.subject));
      }
    }
    Colours next;
    for (auto& [label, parts] : signature) {
      std::sort(parts.begin(), parts.end());
      std::string joined = std::to_string(colours.at(label));
      for (const auto& part : parts) joined += "|" + part;
      next[label] = hasher(joined);
    }
    std::size_t next_classes = count_classes(next);
    colours = std::move(next);
    if (next_classes == classes && round > 0) break;
    classes = next_classes;
  }
  return colours;
}

Term relabel(const Term& term, const std::map<std::string, std::string>& mapping) {
  if (!term.is_blank()) return term;
  return Term::blank(mapping.at(term.value()));
}

Graph relabelled(const Graph& g, const std::map<std::string, std::string>& mapping) {
  Graph out;
  for (const auto& [label, ns] : g.prefixes()) out.set_prefix(label, ns);
  for (const auto& t : g) {
    out.insert(Triple(relabel(t.subject, mapping), t.predicate, relabel(t.object, mapping)));
  }
  return out;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b) : a_(a), b_(b) {
    auto ca = refine(a);
    auto cb = refine(b);
    for (const auto& [label, colour] : ca) order_.push_back({colour, label});
    for (const auto& [label, colour] : cb) by_colour_[colour].push_back(label);
    // Smallest colour classes first prunes the search hardest.
    std::map<std::size_t, std::size_t> class_size;
    for (const auto& [label, colour] : ca) class_size[colour]++;
    std::sort(order_.begin(), order_.end(), [&](const auto& x, const auto& y) {
      auto sx = class_size[x.first], sy = class_size[y.first];
      return sx != sy ? sx < sy : x < y;
    });
    for (const auto& t : a) {
      if (t.subject.is_blank()) blank_triples_[t.subject.value()].push_back(&t);
      if (t.object.is_blank() && t.object != t.subject) blank_triples_[t.object.value()].push_back(&t);
    }
  }

  bool run() { return search(0); }

 private:
  bool consistent(const std::string& label) const {
    for (const Triple* t : blank_triples_.at(label)) {
      auto map_term = [&](const Term& term) -> std::optional<Term> {
        if (!term.is_blank()) return term;
        auto it = mapping_.find(term.value());
        if (it == mapping_.end()) return std::nullopt;
        return Term::blank(it->second);
      };
      auto s = map_term(t->subject);
      auto o = map_term(t->object);
      if (s && o && !b_.contains(Triple(*s, t->predicate, *o))) return false;
    }
    return true;
  }

  bool search(std::size_t i) {
    if (i == order_.size()) return true;
    const auto& [colour, label] = order_[i];
    auto it = by_colour_.find(colour);
    if (it == by_colour_.end()) return false;
    for (const auto& candidate : it->second) {
      if (used_.count(candidate)) continue;
      mapping_[label] = candidate;
      used_.insert(candidate);
      if (consistent(label) && search(i + 1)) return true;
      used_.erase(candidate);
      mapping_.erase(label);
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::pair<std::size_t, std::string>> order_;
  std::map<std::size_t, std::vector<std::string>> by_colour_;
  std::map<std::string, std::vector<const Triple*>> blank_triples_;
  std::map<std::string, std::string> mapping_;
  std::set<std::string> used_;
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  std::set<std::string> blanks_a, blanks_b;
  for (const auto& t : a) {
    bool has_blank = t.subject.is_blank() || t.object.is_blank();
    if (!has_blank && !b.contains(t)) return false;
    if (t.subject.is_blank()) blanks_a.insert(t.subject.value());
    if (t.object.is_blank()) blanks_a.insert(t.object.value());
  }
  for (const auto& t : b) {
    if (t.subject.is_blank()) blanks_b.insert(t.subject.value());
    if (t.object.is_blank()) blanks_b.insert(t.object.value());
  }
  if (blanks_a.size() != blanks_b.size()) return false;
  if (blanks_a.empty()) return a == b;
  return IsomorphismSearch(a, b).run();
}

Graph canonicalize_blank_nodes(const Graph& g) {
  if (!g.has_blank_nodes()) return g;
  auto colours = refine(g);
  std::vector<std::pair<std::size_t, std::string>> order;
  for (const auto& [label, colour] : colours) order.push_back({colour, label});
  std::sort(order.begin(), order.end());
  std::map<std::string, std::string> mapping;
  for (std::size_t i = 0; i < order.size(); ++i) mapping[order[i].second] = "c" + std::to_string(i);
  return relabelled(g, mapping);
}

Graph skolemize(const Graph& g, const std::string& base) {
  std::map<std::string, Term> mapping;
  for (const auto& t : g) {
    for (const Term* term : {&t.subject, &t.object}) {
      if (term->is_blank()) mapping.emplace(term->value(), Term::iri(base));
    }
  }
  std::size_t n = 0;
  for (auto& [label, iri] : mapping) iri = Term::iri(base + "b" + std::to_string(n++));
  auto sk = [&](const Term& term) { return term.is_blank() ? mapping.at(term.value()) : term; };
  Graph out;
  for (const auto& [label, ns] : g.prefixes()) out.set_prefix(label, ns);
  for (const auto& t : g) out.insert(Triple(sk(t.subject), t.predicate, sk(t.object)));
  return out;
}

}  // namespace caskbridge::rdf
