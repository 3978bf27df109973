#include <algorithm>
#include <optional>
#include <set>

#include "caskbridge/sparql/select.hpp"

namespace caskbridge::sparql {

namespace {

std::optional<rdf::Term> resolve(const PatternTerm& t, const BindingSet& row) {
  if (const auto* term = std::get_if<rdf::Term>(&t)) return *term;
  auto it = row.find(std::get<Variable>(t).name);
  if (it == row.end()) return std::nullopt;
  return it->second;
}

// Binds `t` to `value` in `row`; false on a conflicting earlier binding.
bool unify(const PatternTerm& t, const rdf::Term& value, BindingSet& row) {
  const auto* var = std::get_if<Variable>(&t);
  if (!var) return true;
  auto [it, inserted] = row.emplace(var->name, value);
  return inserted || it->second == value;
}

std::optional<std::string> string_value(const std::optional<rdf::Term>& term) {
  if (!term || !term->is_literal()) return std::nullopt;
  return term->value();
}

std::optional<rdf::Term> eval(const Expression& e, const BindingSet& row) {
  switch (e.op) {
    case Expression::Op::kVariable: {
      auto it = row.find(e.text);
      if (it == row.end()) return std::nullopt;
      return it->second;
    }
    case Expression::Op::kLiteral:
      return rdf::Term::literal(e.text);
    case Expression::Op::kStr: {
      auto arg = eval(e.args[0], row);
      if (!arg || arg->is_blank()) return std::nullopt;
      return rdf::Term::literal(arg->value());
    }
    case Expression::Op::kStrAfter: {
      auto haystack = string_value(eval(e.args[0], row));
      auto needle = string_value(eval(e.args[1], row));
      if (!haystack || !needle) return std::nullopt;
      return rdf::Term::literal(local_name_after(*haystack, *needle));
    }
  }
  return std::nullopt;
}

}  // namespace

std::string local_name_after(std::string_view value, std::string_view separator) {
  auto pos = value.find(separator);
  if (pos != std::string_view::npos) return std::string(value.substr(pos + separator.size()));
  if (separator != "#") return "";
  auto slash = value.rfind('/');
  if (slash != std::string_view::npos) return std::string(value.substr(slash + 1));
  return std::string(value);
}

std::vector<BindingSet> evaluate_select(const SelectQuery& query, const rdf::Graph& graph) {
  std::vector<BindingSet> rows{BindingSet{}};
  for (const auto& pattern : query.patterns) {
    std::vector<BindingSet> next;
    for (const auto& row : rows) {
      for (const auto& triple : graph.match(resolve(pattern.subject, row), resolve(pattern.predicate, row),
                                            resolve(pattern.object, row))) {
        BindingSet extended = row;
        if (unify(pattern.subject, triple.subject, extended) && unify(pattern.predicate, triple.predicate, extended) &&
            unify(pattern.object, triple.object, extended)) {
          next.push_back(std::move(extended));
        }
      }
    }
    rows = std::move(next);
    if (rows.empty()) return {};
  }
  for (auto& row : rows) {
    for (const auto& bind : query.binds) {
      if (auto value = eval(bind.expression, row)) row.emplace(bind.target, *value);
    }
  }
  std::set<std::vector<std::string>> seen;
  std::vector<std::pair<std::vector<std::string>, BindingSet>> projected;
  for (const auto& row : rows) {
    BindingSet out;
    std::vector<std::string> key;
    bool complete = true;
    for (const auto& v : query.variables) {
      auto it = row.find(v);
      if (it == row.end()) {
        complete = false;
        break;
      }
      out.emplace(v, it->second);
      key.push_back(it->second.str());
    }
    if (complete && seen.insert(key).second) projected.emplace_back(std::move(key), std::move(out));
  }
  std::sort(projected.begin(), projected.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<BindingSet> result;
  result.reserve(projected.size());
  for (auto& p : projected) result.push_back(std::move(p.second));
  return result;
}

}  // namespace caskbridge::sparql
