#include "caskbridge/rdfex/extraction.hpp"

#include <cctype>
#include <optional>
#include <set>

namespace caskbridge::rdfex {

namespace {

bool is_var_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

void collect_placeholders(const json::Json& node, std::set<std::string>& out) {
  if (node.is_string()) {
    for (auto& v : placeholders_in(node.as_string())) out.insert(v);
  } else if (node.is_array()) {
    for (const auto& item : node.as_array()) collect_placeholders(item, out);
  } else if (node.is_object()) {
    for (const auto& [name, value] : node.as_object()) {
      for (auto& v : placeholders_in(name)) out.insert(v);
      collect_placeholders(value, out);
    }
  }
}

json::Json instantiate(const json::Json& node, const std::map<std::string, std::string>& values) {
  if (node.is_string()) return json::Json(substitute(node.as_string(), values));
  if (node.is_array()) {
    json::Json out = json::Json::array();
    for (const auto& item : node.as_array()) out.push_back(instantiate(item, values));
    return out;
  }
  if (node.is_object()) {
    json::Json out = json::Json::object();
    for (const auto& [name, value] : node.as_object()) out.add_member(substitute(name, values), instantiate(value, values));
    return out;
  }
  return node;
}

std::string escape_path_literal(std::string_view value) {
  std::string out;
  for (char c : value) {
    if (c == '\'' || c == '\\' || c == '"') out += '\\';
    out += c;
  }
  return out;
}

const std::string& required_string(const json::Json& rule, const char* field, const std::string& id) {
  const json::Json* value = rule.find(field);
  if (!value || !value->is_string()) {
    throw InvalidRuleDocument("rule " + id + ": missing string field \"" + std::string(field) + "\"");
  }
  return value->as_string();
}

ExtractionRule parse_rule(const json::Json& entry, const std::string& prefix_block, std::size_t index) {
  if (!entry.is_object()) throw InvalidRuleDocument("rule #" + std::to_string(index) + " is not an object");
  ExtractionRule rule;
  std::string fallback_id = "#" + std::to_string(index);
  rule.id = entry.find("id") ? required_string(entry, "id", fallback_id) : fallback_id;
  if (entry.find("source")) rule.source = required_string(entry, "source", rule.id);
  if (entry.find("targetFormat")) rule.target_format = required_string(entry, "targetFormat", rule.id);
  if (rule.target_format != "JSON") throw UnsupportedTargetFormat(rule.target_format);
  rule.query_text = required_string(entry, "query", rule.id);
  rule.query = sparql::parse_query(prefix_block + rule.query_text);
  rule.container = required_string(entry, "container", rule.id);

  const json::Json* snippet = entry.find("snippet");
  if (!snippet) throw InvalidRuleDocument("rule " + rule.id + ": missing \"snippet\"");
  rule.snippet = snippet->is_string() ? json::parse_json(snippet->as_string()) : *snippet;

  std::set<std::string> projected(rule.query.variables.begin(), rule.query.variables.end());
  std::set<std::string> used;
  collect_placeholders(rule.snippet, used);
  for (const auto& v : used) {
    if (!projected.count(v)) throw UnknownVariableInSnippet(rule.id, v);
  }
  std::map<std::string, std::string> probe;
  for (const auto& v : placeholders_in(rule.container)) {
    if (!projected.count(v)) throw UnknownVariableInSnippet(rule.id, v);
    probe[v] = "x";
  }
  json::compile_path(substitute(rule.container, probe));
  return rule;
}

std::string describe(const sparql::BindingSet& row) {
  std::string out = "{";
  for (const auto& [name, term] : row) {
    if (out.size() > 1) out += ", ";
    out += "?" + name + " = " + term.str();
  }
  return out + "}";
}

}  // namespace

std::vector<std::string> placeholders_in(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '?') continue;
    std::size_t j = i + 1;
    while (j < text.size() && is_var_char(text[j])) ++j;
    if (j > i + 1) out.emplace_back(text.substr(i + 1, j - i - 1));
    i = j - 1;
  }
  return out;
}

std::string substitute(std::string_view text, const std::map<std::string, std::string>& values) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '?') {
      out += text[i];
      continue;
    }
    std::size_t j = i + 1;
    while (j < text.size() && is_var_char(text[j])) ++j;
    auto it = values.find(std::string(text.substr(i + 1, j - i - 1)));
    if (j > i + 1 && it != values.end()) {
      out += it->second;
    } else {
      out += text.substr(i, j - i);
    }
    i = j - 1;
  }
  return out;
}

std::vector<ExtractionRule> parse_extraction_rules(std::string_view document) {
  json::Json doc = json::parse_json(document);
  std::string prefix_block;
  const json::Json* rules = &doc;
  if (doc.is_object()) {
    if (const json::Json* prefixes = doc.find("prefixes")) {
      if (!prefixes->is_object()) throw InvalidRuleDocument("\"prefixes\" must be an object");
      for (const auto& [label, ns] : prefixes->as_object()) {
        if (!ns.is_string()) throw InvalidRuleDocument("prefix " + label + " must map to a string");
        prefix_block += "PREFIX " + label + ": <" + ns.as_string() + ">\n";
      }
    }
    rules = doc.find("rules");
    if (!rules) throw InvalidRuleDocument("rule document has no \"rules\" array");
  }
  if (!rules->is_array()) throw InvalidRuleDocument("rules must be a JSON array");
  std::vector<ExtractionRule> out;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < rules->as_array().size(); ++i) {
    out.push_back(parse_rule(rules->as_array()[i], prefix_block, i));
    if (!ids.insert(out.back().id).second) throw InvalidRuleDocument("duplicate rule id " + out.back().id);
  }
  return out;
}

InverseResult execute_inverse(const std::vector<ExtractionRule>& rules, const rdf::Graph& graph, json::Json skeleton) {
  InverseResult result{std::move(skeleton), {}, {}};
  for (const auto& rule : rules) {
    std::size_t& count = result.inserted[rule.id];
    std::optional<json::PathExpr> fixed;
    if (placeholders_in(rule.container).empty()) fixed = json::compile_path(rule.container);

    for (const auto& row : sparql::evaluate_select(rule.query, graph)) {
      std::map<std::string, std::string> values;
      for (const auto& [name, term] : row) {
        if (term.is_blank()) throw SnippetInstantiationError(rule.id, describe(row));
        values[name] = term.value();
      }
      std::string container_text = rule.container;
      json::PathExpr path;
      if (fixed) {
        path = *fixed;
      } else {
        std::map<std::string, std::string> escaped;
        for (const auto& [name, value] : values) escaped[name] = escape_path_literal(value);
        container_text = substitute(rule.container, escaped);
        path = json::compile_path(container_text);
      }
      auto matches = json::evaluate_path(result.document, path);
      if (matches.empty()) throw ContainerNotFound(rule.id, container_text);
      if (matches.size() > 1) {
        result.warnings.push_back("rule " + rule.id + ": " + std::to_string(matches.size()) + " containers match " +
                                  container_text + ", using the first");
      }
      json::Location target = matches.front().location;
      json::Json snippet = instantiate(rule.snippet, values);
      json::Json* container = json::navigate(result.document, target);
      if (container->is_object() && snippet.is_object() && snippet.as_object().size() == 1) {
        auto& [name, value] = snippet.as_object().front();
        if (json::Json* existing = container->find(name)) {
          if (existing->is_array() && value.is_array()) {
            for (auto& item : value.as_array()) existing->push_back(std::move(item));
            ++count;
          } else {
            result.warnings.push_back("rule " + rule.id + ": member \"" + name + "\" already present at " +
                                      json::to_string(target) + ", binding " + describe(row) + " skipped");
          }
          continue;
        }
      }
      json::insert_into(result.document, target, std::move(snippet));
      ++count;
    }
  }
  return result;
}

}  // namespace caskbridge::rdfex
