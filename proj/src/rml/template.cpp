#include "caskbridge/rml/triples_map.hpp"

namespace caskbridge::rml {

json::PathExpr compile_reference(std::string_view reference) {
  if (reference.empty()) throw json::PathSyntaxError(0, "empty reference");
  if (reference.front() == '$') return json::compile_path(reference);
  std::string absolute = reference.front() == '[' ? "$" : "$.";
  absolute += reference;
  return json::compile_path(absolute);
}

TemplateString TemplateString::parse(std::string_view text, const std::string& rule) {
  TemplateString out;
  out.text_ = std::string(text);
  std::string literal;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\\') {
      if (i + 1 >= text.size()) throw BadTemplate(rule, out.text_, "dangling escape");
      literal += text[++i];
    } else if (c == '}') {
      throw BadTemplate(rule, out.text_, "unbalanced '}'");
    } else if (c == '{') {
      auto close = text.find('}', i + 1);
      if (close == std::string_view::npos) throw BadTemplate(rule, out.text_, "unbalanced '{'");
      std::string reference(text.substr(i + 1, close - i - 1));
      if (reference.empty()) throw BadTemplate(rule, out.text_, "empty placeholder");
      if (reference.find('{') != std::string::npos) throw BadTemplate(rule, out.text_, "nested '{'");
      if (!literal.empty()) out.segments_.emplace_back(std::move(literal));
      literal.clear();
      try {
        auto path = compile_reference(reference);
        out.segments_.emplace_back(Placeholder{std::move(reference), std::move(path)});
      } catch (const Error& e) {
        throw BadTemplate(rule, out.text_, e.what());
      }
      i = close;
    } else {
      literal += c;
    }
  }
  if (!literal.empty()) out.segments_.emplace_back(std::move(literal));
  return out;
}

bool TemplateString::has_placeholders() const {
  for (const auto& s : segments_) {
    if (std::holds_alternative<Placeholder>(s)) return true;
  }
  return false;
}

}  // namespace caskbridge::rml
