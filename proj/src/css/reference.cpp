#include "caskbridge/css/reference.hpp"

namespace caskbridge::css {

namespace {

const json::Json::Array* children_of(const json::Json& node, std::string& member) {
  for (const char* name : {"submodelElements", "value", "statements"}) {
    const json::Json* field = node.find(name);
    if (field && field->is_array()) {
      member = name;
      return &field->as_array();
    }
  }
  return nullptr;
}

}  // namespace

AasReferenceChain read_reference(const json::Json& reference) {
  AasReferenceChain chain;
  const json::Json* keys = reference.find("keys");
  if (!keys || !keys->is_array()) return chain;
  for (const auto& key : keys->as_array()) {
    chain.keys.push_back(ReferenceKey{std::string(key.string_member("type")), std::string(key.string_member("value"))});
  }
  return chain;
}

std::string to_string(const AasReferenceChain& chain) {
  std::string out;
  for (const auto& key : chain.keys) {
    if (!out.empty()) out += '/';
    out += key.type + ":" + key.value;
  }
  return out.empty() ? "(empty)" : out;
}

std::optional<json::PathMatch> resolve_reference(const json::Json& env, const AasReferenceChain& chain) {
  if (chain.keys.empty() || chain.keys.front().type != "Submodel") return std::nullopt;
  const json::Json* submodels = env.find("submodels");
  if (!submodels || !submodels->is_array()) return std::nullopt;

  const std::string& wanted = chain.keys.front().value;
  std::vector<std::size_t> by_id;
  std::vector<std::size_t> by_id_short;
  const auto& list = submodels->as_array();
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].string_member("id") == wanted) by_id.push_back(i);
    if (list[i].string_member("idShort") == wanted) by_id_short.push_back(i);
  }
  const auto& hits = by_id.empty() ? by_id_short : by_id;
  if (hits.empty()) return std::nullopt;
  if (hits.size() > 1) throw AmbiguousReference(to_string(chain));

  json::Location location{std::string("submodels"), hits.front()};
  const json::Json* node = &list[hits.front()];
  for (std::size_t k = 1; k < chain.keys.size(); ++k) {
    std::string member;
    const auto* children = children_of(*node, member);
    if (!children) return std::nullopt;
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < children->size(); ++i) {
      if ((*children)[i].string_member("idShort") != chain.keys[k].value) continue;
      if (found) throw AmbiguousReference(to_string(chain));
      found = i;
    }
    if (!found) return std::nullopt;
    location.emplace_back(member);
    location.emplace_back(*found);
    node = &(*children)[*found];
  }
  return json::PathMatch{std::move(location), node};
}

}  // namespace caskbridge::css
