#include "caskbridge/json/path.hpp"

#include <cctype>

namespace caskbridge::json {

namespace {

bool is_ident_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || u >= 0x80 || c == '_' || c == '-';
}

class PathCompiler {
 public:
  explicit PathCompiler(std::string_view text) : text_(text) {}

  PathExpr run() {
    PathExpr expr;
    expr.source = std::string(text_);
    skip_ws();
    if (peek() != '$') throw PathSyntaxError(pos_, "path must start with '$'");
    ++pos_;
    expr.steps.emplace_back(step::Root{});
    while (!at_end()) {
      char c = peek();
      if (c == '.' && peek(1) == '.') {
        pos_ += 2;
        if (peek() == '[' && (peek(1) == '\'' || peek(1) == '"')) {
          ++pos_;
          std::string name = quoted();
          expect(']');
          expr.steps.emplace_back(step::RecursiveDescent{std::move(name)});
        } else if (is_ident_char(peek())) {
          expr.steps.emplace_back(step::RecursiveDescent{identifier()});
        } else {
          throw UnsupportedSyntax(std::string(rest_from(pos_ - 2)));
        }
      } else if (c == '.') {
        ++pos_;
        if (peek() == '*') {
          ++pos_;
          expr.steps.emplace_back(step::Wildcard{});
        } else if (is_ident_char(peek())) {
          expr.steps.emplace_back(step::Child{identifier()});
        } else {
          throw PathSyntaxError(pos_, "expected member name after '.'");
        }
      } else if (c == '[') {
        expr.steps.push_back(bracket());
      } else {
        throw PathSyntaxError(pos_, std::string("unexpected '") + c + "'");
      }
    }
    return expr;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
  void skip_ws() {
    while (peek() == ' ' || peek() == '\t') ++pos_;
  }
  std::string_view rest_from(std::size_t start) const { return text_.substr(start); }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw PathSyntaxError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (is_ident_char(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string quoted() {
    char quote = peek();
    std::size_t start = pos_;
    ++pos_;
    std::string value;
    for (;;) {
      if (at_end()) throw PathSyntaxError(start, "unterminated string");
      char c = peek();
      ++pos_;
      if (c == quote) return value;
      if (c == '\\') {
        if (at_end()) throw PathSyntaxError(start, "unterminated string");
        value += peek();
        ++pos_;
        continue;
      }
      value += c;
    }
  }

  // Text from `start` up to and including the closing ']' (for messages).
  std::string fragment_from(std::size_t start) const {
    auto close = text_.find(']', start);
    return std::string(text_.substr(start, close == std::string_view::npos ? std::string_view::npos : close - start + 1));
  }

  Step bracket() {
    std::size_t start = pos_;
    ++pos_;  // '['
    skip_ws();
    char c = peek();
    if (c == '*') {
      ++pos_;
      expect(']');
      return step::Wildcard{};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t value = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        value = value * 10 + static_cast<std::size_t>(peek() - '0');
        ++pos_;
      }
      skip_ws();
      if (peek() != ']') throw UnsupportedSyntax(fragment_from(start));
      ++pos_;
      return step::Index{value};
    }
    if (c == '\'' || c == '"') {
      std::string name = quoted();
      skip_ws();
      if (peek() != ']') throw UnsupportedSyntax(fragment_from(start));
      ++pos_;
      return step::Child{std::move(name)};
    }
    if (c == '?') return filter(start);
    if (c == '-' || c == ':' || c == '(') throw UnsupportedSyntax(fragment_from(start));
    throw PathSyntaxError(pos_, "malformed bracket expression");
  }

  Step filter(std::size_t start) {
    auto unsupported = [&]() -> UnsupportedSyntax { return UnsupportedSyntax(fragment_from(start)); };
    ++pos_;  // '?'
    skip_ws();
    if (peek() != '(') throw unsupported();
    ++pos_;
    skip_ws();
    if (peek() != '@' || peek(1) != '.') throw unsupported();
    pos_ += 2;
    std::string field = identifier();
    if (field.empty()) throw unsupported();
    skip_ws();
    if (peek() != '=' || peek(1) != '=') throw unsupported();
    pos_ += 2;
    skip_ws();
    if (peek() != '\'' && peek() != '"') throw unsupported();
    std::string literal = quoted();
    skip_ws();
    if (peek() != ')') throw unsupported();
    ++pos_;
    skip_ws();
    if (peek() != ']') throw unsupported();
    ++pos_;
    return step::Filter{std::move(field), std::move(literal)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Cursor {
  Location location;
  const Json* node;
};

template <typename Fn>
void for_each_child(const Cursor& c, Fn&& fn) {
  if (c.node->is_array()) {
    const auto& items = c.node->as_array();
    for (std::size_t i = 0; i < items.size(); ++i) {
      Location loc = c.location;
      loc.emplace_back(i);
      fn(Cursor{std::move(loc), &items[i]});
    }
  } else if (c.node->is_object()) {
    for (const auto& [name, value] : c.node->as_object()) {
      Location loc = c.location;
      loc.emplace_back(name);
      fn(Cursor{std::move(loc), &value});
    }
  }
}

void descend(const Cursor& c, const std::string& name, std::vector<Cursor>& out) {
  if (const Json* member = c.node->find(name)) {
    Location loc = c.location;
    loc.emplace_back(name);
    out.push_back(Cursor{std::move(loc), member});
  }
  for_each_child(c, [&](Cursor child) { descend(child, name, out); });
}

struct StepApplier {
  const std::vector<Cursor>& in;
  std::vector<Cursor>& out;

  void operator()(const step::Root&) const { out = in; }

  void operator()(const step::Child& s) const {
    for (const auto& c : in) {
      if (const Json* member = c.node->find(s.name)) {
        Location loc = c.location;
        loc.emplace_back(s.name);
        out.push_back(Cursor{std::move(loc), member});
      }
    }
  }

  void operator()(const step::Wildcard&) const {
    for (const auto& c : in) for_each_child(c, [&](Cursor child) { out.push_back(std::move(child)); });
  }

  void operator()(const step::Index& s) const {
    for (const auto& c : in) {
      if (c.node->is_array() && s.index < c.node->as_array().size()) {
        Location loc = c.location;
        loc.emplace_back(s.index);
        out.push_back(Cursor{std::move(loc), &c.node->as_array()[s.index]});
      }
    }
  }

  void operator()(const step::RecursiveDescent& s) const {
    for (const auto& c : in) descend(c, s.name, out);
  }

  void operator()(const step::Filter& s) const {
    for (const auto& c : in) {
      for_each_child(c, [&](Cursor child) {
        const Json* field = child.node->find(s.field);
        if (field && field->is_string() && field->as_string() == s.literal) out.push_back(std::move(child));
      });
    }
  }
};

}  // namespace

PathExpr compile_path(std::string_view expr) { return PathCompiler(expr).run(); }

std::vector<PathMatch> evaluate_path(const Json& doc, const PathExpr& path) {
  std::vector<Cursor> current{Cursor{{}, &doc}};
  for (const auto& s : path.steps) {
    std::vector<Cursor> next;
    std::visit(StepApplier{current, next}, s);
    current = std::move(next);
  }
  std::vector<PathMatch> out;
  out.reserve(current.size());
  for (auto& c : current) out.push_back(PathMatch{std::move(c.location), c.node});
  return out;
}

const Json* navigate(const Json& doc, const Location& location) {
  const Json* node = &doc;
  for (const auto& seg : location) {
    if (const auto* name = std::get_if<std::string>(&seg)) {
      node = node->find(*name);
    } else {
      auto index = std::get<std::size_t>(seg);
      node = node->is_array() && index < node->as_array().size() ? &node->as_array()[index] : nullptr;
    }
    if (!node) return nullptr;
  }
  return node;
}

Json* navigate(Json& doc, const Location& location) {
  return const_cast<Json*>(navigate(std::as_const(doc), location));
}

void insert_into(Json& doc, const Location& location, Json child) {
  Json* target = navigate(doc, location);
  if (!target) throw TargetNotFound(to_string(location));
  if (target->is_array()) {
    target->push_back(std::move(child));
    return;
  }
  if (!target->is_object()) throw TargetNotContainer(to_string(location));
  if (!child.is_object() || child.as_object().size() != 1) {
    throw TypeError("inserting into an object requires a single-member object");
  }
  auto& member = child.as_object().front();
  if (target->find(member.first)) throw DuplicateMemberName(member.first);
  target->add_member(std::move(member.first), std::move(member.second));
}

Json insert_at(Json doc, const Location& location, Json child) {
  insert_into(doc, location, std::move(child));
  return doc;
}

std::string to_string(const Location& location) {
  std::string out = "$";
  for (const auto& seg : location) {
    if (const auto* name = std::get_if<std::string>(&seg)) {
      std::string escaped;
      for (char c : *name) {
        if (c == '\'' || c == '\\') escaped += '\\';
        escaped += c;
      }
      out += "['" + escaped + "']";
    } else {
      out += "[" + std::to_string(std::get<std::size_t>(seg)) + "]";
    }
  }
  return out;
}

}  // namespace caskbridge::json
