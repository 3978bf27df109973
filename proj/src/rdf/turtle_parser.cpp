#include <cctype>
#include <map>

#include "caskbridge/rdf/turtle.hpp"

namespace caskbridge::rdf {

namespace {

struct IriParts {
  std::optional<std::string> scheme;
  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;
};

IriParts split_iri(std::string_view s) {
  IriParts p;
  auto colon = s.find(':');
  auto first_delim = s.find_first_of("/?#");
  if (colon != std::string_view::npos && colon > 0 && (first_delim == std::string_view::npos || colon < first_delim) &&
      std::isalpha(static_cast<unsigned char>(s[0]))) {
    p.scheme = std::string(s.substr(0, colon));
    s.remove_prefix(colon + 1);
  }
  if (s.substr(0, 2) == "//") {
    s.remove_prefix(2);
    auto end = s.find_first_of("/?#");
    p.authority = std::string(s.substr(0, end));
    s.remove_prefix(end == std::string_view::npos ? s.size() : end);
  }
  auto hash = s.find('#');
  if (hash != std::string_view::npos) {
    p.fragment = std::string(s.substr(hash + 1));
    s = s.substr(0, hash);
  }
  auto q = s.find('?');
  if (q != std::string_view::npos) {
    p.query = std::string(s.substr(q + 1));
    s = s.substr(0, q);
  }
  p.path = std::string(s);
  return p;
}

std::string remove_dot_segments(std::string input) {
  std::string output;
  while (!input.empty()) {
    if (input.rfind("../", 0) == 0) {
      input.erase(0, 3);
    } else if (input.rfind("./", 0) == 0) {
      input.erase(0, 2);
    } else if (input.rfind("/./", 0) == 0) {
      input.replace(0, 3, "/");
    } else if (input == "/.") {
      input = "/";
    } else if (input.rfind("/../", 0) == 0 || input == "/..") {
      input = input == "/.." ? "/" : input.substr(3);
      auto slash = output.rfind('/');
      output.erase(slash == std::string::npos ? 0 : slash);
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      auto start = input[0] == '/' ? 1 : 0;
      auto next = input.find('/', start);
      output += input.substr(0, next);
      input.erase(0, next == std::string::npos ? input.size() : next);
    }
  }
  return output;
}

std::string join(const IriParts& p) {
  std::string out;
  if (p.scheme) out += *p.scheme + ":";
  if (p.authority) out += "//" + *p.authority;
  out += p.path;
  if (p.query) out += "?" + *p.query;
  if (p.fragment) out += "#" + *p.fragment;
  return out;
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool is_name_start(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || u >= 0x80;
}

bool is_name_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || u >= 0x80 || c == '_' || c == '-';
}

bool is_local_escape(char c) {
  static constexpr std::string_view kEscapable = "_~.-!$&'()*+,;=/?#@%";
  return kEscapable.find(c) != std::string_view::npos;
}

class TurtleParser {
 public:
  TurtleParser(std::string_view text, const std::optional<std::string>& base) : text_(text), base_(base) {}

  Graph run() {
    skip_ws();
    while (!at_end()) {
      statement();
      skip_ws();
    }
    for (const auto& [label, ns] : prefixes_) graph_.set_prefix(label, ns);
    return std::move(graph_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SyntaxError(line, column, message);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool keyword_ahead(std::string_view word, bool case_insensitive) const {
    if (text_.size() - pos_ < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      char a = text_[pos_ + i];
      char b = word[i];
      if (case_insensitive ? std::toupper(static_cast<unsigned char>(a)) != b : a != b) return false;
    }
    char after = pos_ + word.size() < text_.size() ? text_[pos_ + word.size()] : '\0';
    return !is_name_char(after) && after != ':';
  }

  void statement() {
    if (peek() == '@') {
      if (keyword_ahead("@prefix", false)) {
        pos_ += 7;
        prefix_decl();
        expect('.');
      } else if (keyword_ahead("@base", false)) {
        pos_ += 5;
        base_decl();
        expect('.');
      } else {
        fail("unknown directive");
      }
      return;
    }
    if (keyword_ahead("PREFIX", true)) {
      pos_ += 6;
      prefix_decl();
      return;
    }
    if (keyword_ahead("BASE", true)) {
      pos_ += 4;
      base_decl();
      return;
    }
    triples();
    expect('.');
  }

  void prefix_decl() {
    skip_ws();
    std::size_t start = pos_;
    std::string label;
    while (!at_end() && peek() != ':') {
      if (!is_name_char(peek()) && peek() != '.') fail("malformed prefix label");
      label += peek();
      ++pos_;
    }
    if (peek() != ':') fail_at(start, "expected prefix label followed by ':'");
    ++pos_;
    skip_ws();
    prefixes_[label] = iriref();
  }

  void base_decl() {
    skip_ws();
    base_ = iriref();
  }

  void triples() {
    skip_ws();
    if (peek() == '[') {
      Term subject = blank_node_property_list();
      skip_ws();
      if (peek() != '.') predicate_object_list(subject);
      return;
    }
    Term subject = subject_term();
    predicate_object_list(subject);
  }

  Term subject_term() {
    skip_ws();
    char c = peek();
    if (c == '<') return Term::iri(iriref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '(') fail("collections are not supported");
    if (c == '"' || c == '\'' || std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') {
      fail("literal in subject position");
    }
    return Term::iri(prefixed_name());
  }

  void predicate_object_list(const Term& subject) {
    for (;;) {
      skip_ws();
      Term predicate = verb();
      object_list(subject, predicate);
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        ++pos_;
        skip_ws();
      }
      // A trailing ';' before '.' or ']' is allowed.
      if (peek() == '.' || peek() == ']' || at_end()) return;
    }
  }

  Term verb() {
    skip_ws();
    if (peek() == 'a' && !is_name_char(peek(1)) && peek(1) != ':') {
      ++pos_;
      return Term::iri(std::string(rdfns::kType));
    }
    if (peek() == '<') return Term::iri(iriref());
    if (peek() == '_' || peek() == '[' || peek() == '"') fail("predicate must be an IRI");
    return Term::iri(prefixed_name());
  }

  void object_list(const Term& subject, const Term& predicate) {
    for (;;) {
      Term o = object();
      graph_.insert(Triple(subject, predicate, std::move(o)));
      skip_ws();
      if (peek() != ',') return;
      ++pos_;
    }
  }

  Term object() {
    skip_ws();
    char c = peek();
    if (c == '<') return Term::iri(iriref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '[') return blank_node_property_list();
    if (c == '(') fail("collections are not supported");
    if (c == '"' || c == '\'') return rdf_literal();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      return numeric_literal();
    }
    if (keyword_ahead("true", false)) {
      pos_ += 4;
      return Term(Literal::typed("true", Iri(std::string(xsd::kBoolean))));
    }
    if (keyword_ahead("false", false)) {
      pos_ += 5;
      return Term(Literal::typed("false", Iri(std::string(xsd::kBoolean))));
    }
    return Term::iri(prefixed_name());
  }

  Term blank_node_property_list() {
    ++pos_;  // '['
    Term node = Term::blank(next_blank());
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      return node;
    }
    predicate_object_list(node);
    expect(']');
    return node;
  }

  std::string next_blank() { return "b" + std::to_string(blank_counter_++); }

  Term blank_label() {
    pos_ += 2;
    std::size_t start = pos_;
    while (!at_end() && (is_name_char(peek()) || peek() == '.')) ++pos_;
    while (pos_ > start && text_[pos_ - 1] == '.') --pos_;
    if (pos_ == start) fail("empty blank node label");
    std::string label(text_.substr(start, pos_ - start));
    auto [it, inserted] = blank_labels_.try_emplace(label);
    if (inserted) it->second = next_blank();
    return Term::blank(it->second);
  }

  unsigned long hex_value(std::size_t digits) {
    unsigned long value = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      char c = peek();
      if (!std::isxdigit(static_cast<unsigned char>(c))) fail("malformed unicode escape");
      value = value * 16 + static_cast<unsigned long>(std::isdigit(static_cast<unsigned char>(c))
                                                         ? c - '0'
                                                         : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
      ++pos_;
    }
    return value;
  }

  std::string iriref() {
    skip_ws();
    std::size_t start = pos_;
    if (peek() != '<') fail("expected IRI");
    ++pos_;
    std::string value;
    for (;;) {
      if (at_end()) fail_at(start, "unterminated IRI");
      char c = peek();
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        ++pos_;
        char kind = peek();
        ++pos_;
        if (kind == 'u') {
          append_utf8(value, hex_value(4));
        } else if (kind == 'U') {
          append_utf8(value, hex_value(8));
        } else {
          fail("invalid escape in IRI");
        }
        continue;
      }
      auto u = static_cast<unsigned char>(c);
      if (u <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' || c == '`') {
        fail("invalid character in IRI");
      }
      value += c;
      ++pos_;
    }
    return absolutize(value, start);
  }

  std::string absolutize(const std::string& value, std::size_t at) {
    if (is_absolute_iri(value)) return value;
    if (!base_) throw MissingBase(value);
    auto resolved = resolve_iri(value, *base_);
    if (!is_absolute_iri(resolved)) fail_at(at, "IRI <" + value + "> does not resolve to an absolute IRI");
    return resolved;
  }

  std::string prefixed_name() {
    std::size_t start = pos_;
    std::string prefix;
    if (peek() != ':') {
      if (!is_name_start(peek())) fail("unexpected character '" + std::string(1, peek()) + "'");
      while (!at_end() && (is_name_char(peek()) || peek() == '.')) prefix += text_[pos_++];
      while (!prefix.empty() && prefix.back() == '.') {
        prefix.pop_back();
        --pos_;
      }
    }
    if (peek() != ':') fail_at(start, "expected prefixed name, found '" + prefix + "'");
    ++pos_;
    std::string local;
    std::size_t committed = pos_;
    std::size_t committed_len = 0;
    for (;;) {
      char c = peek();
      if (c == '\\' && is_local_escape(peek(1))) {
        local += peek(1);
        pos_ += 2;
      } else if (c == '%' && std::isxdigit(static_cast<unsigned char>(peek(1))) &&
                 std::isxdigit(static_cast<unsigned char>(peek(2)))) {
        local.append(text_.substr(pos_, 3));
        pos_ += 3;
      } else if (c != '\0' && (is_name_char(c) || c == ':' || (c == '.' && !local.empty()))) {
        local += c;
        ++pos_;
        if (c == '.') continue;
      } else {
        break;
      }
      committed = pos_;
      committed_len = local.size();
    }
    // Local names never end with '.'; it belongs to the statement.
    pos_ = committed;
    local.resize(committed_len);
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) throw UnknownPrefix(prefix);
    return absolutize(it->second + local, start);
  }

  Term rdf_literal() {
    std::string lexical = string_body();
    if (peek() == '@') {
      ++pos_;
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) ++pos_;
      std::string tag(text_.substr(start, pos_ - start));
      if (!is_language_tag(tag)) fail_at(start, "malformed language tag '" + tag + "'");
      return Term(Literal::tagged(std::move(lexical), std::move(tag)));
    }
    if (peek() == '^' && peek(1) == '^') {
      pos_ += 2;
      std::string datatype = peek() == '<' ? iriref() : prefixed_name();
      return Term(Literal{std::move(lexical), std::move(datatype), {}});
    }
    return Term(Literal::string(std::move(lexical)));
  }

  std::string string_body() {
    std::size_t start = pos_;
    char quote = peek();
    bool long_form = peek(1) == quote && peek(2) == quote;
    pos_ += long_form ? 3 : 1;
    std::string value;
    for (;;) {
      if (at_end()) fail_at(start, "unterminated string literal");
      char c = peek();
      if (c == quote) {
        if (!long_form) {
          ++pos_;
          return value;
        }
        if (peek(1) == quote && peek(2) == quote) {
          pos_ += 3;
          // """a"""" ends with a quote character inside the literal.
          while (peek() == quote) {
            value += quote;
            ++pos_;
          }
          return value;
        }
        value += c;
        ++pos_;
        continue;
      }
      if (!long_form && (c == '\n' || c == '\r')) fail("line break in short string literal");
      if (c == '\\') {
        ++pos_;
        char e = peek();
        ++pos_;
        switch (e) {
          case 't': value += '\t'; break;
          case 'b': value += '\b'; break;
          case 'n': value += '\n'; break;
          case 'r': value += '\r'; break;
          case 'f': value += '\f'; break;
          case '"': value += '"'; break;
          case '\'': value += '\''; break;
          case '\\': value += '\\'; break;
          case 'u': append_utf8(value, hex_value(4)); break;
          case 'U': append_utf8(value, hex_value(8)); break;
          default: fail_at(pos_ - 2, "invalid escape sequence");
        }
        continue;
      }
      value += c;
      ++pos_;
    }
  }

  Term numeric_literal() {
    std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_, ++n;
      return n;
    };
    if (peek() == '+' || peek() == '-') ++pos_;
    std::size_t int_digits = digits();
    std::size_t frac_digits = 0;
    bool has_dot = false;
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      has_dot = true;
      ++pos_;
      frac_digits = digits();
    } else if (peek() == '.' && (peek(1) == 'e' || peek(1) == 'E') && int_digits > 0) {
      has_dot = true;
      ++pos_;
    }
    bool has_exp = false;
    if (peek() == 'e' || peek() == 'E') {
      std::size_t save = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (digits() == 0) {
        pos_ = save;
      } else {
        has_exp = true;
      }
    }
    if (int_digits == 0 && frac_digits == 0) fail_at(start, "malformed number");
    std::string lexical(text_.substr(start, pos_ - start));
    std::string_view datatype = has_exp ? xsd::kDouble : has_dot ? xsd::kDecimal : xsd::kInteger;
    return Term(Literal{std::move(lexical), std::string(datatype), {}});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<std::string> base_;
  std::map<std::string, std::string> prefixes_;
  std::map<std::string, std::string> blank_labels_;
  std::size_t blank_counter_ = 0;
  Graph graph_;
};

}  // namespace

std::string resolve_iri(std::string_view reference, std::string_view base) {
  IriParts r = split_iri(reference);
  IriParts b = split_iri(base);
  IriParts t;
  if (r.scheme) {
    t = r;
    t.path = remove_dot_segments(r.path);
  } else {
    if (r.authority) {
      t.authority = r.authority;
      t.path = remove_dot_segments(r.path);
      t.query = r.query;
    } else {
      if (r.path.empty()) {
        t.path = b.path;
        t.query = r.query ? r.query : b.query;
      } else {
        if (r.path[0] == '/') {
          t.path = remove_dot_segments(r.path);
        } else {
          std::string merged;
          if (b.authority && b.path.empty()) {
            merged = "/" + r.path;
          } else {
            auto slash = b.path.rfind('/');
            merged = (slash == std::string::npos ? "" : b.path.substr(0, slash + 1)) + r.path;
          }
          t.path = remove_dot_segments(merged);
        }
        t.query = r.query;
      }
      t.authority = b.authority;
    }
    t.scheme = b.scheme;
  }
  t.fragment = r.fragment;
  return join(t);
}

Graph parse_turtle(std::string_view text, const std::optional<std::string>& base) {
  return TurtleParser(text, base).run();
}

}  // namespace caskbridge::rdf
