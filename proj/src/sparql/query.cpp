#include <algorithm>
#include <cctype>
#include <set>

#include "caskbridge/sparql/select.hpp"

namespace caskbridge::sparql {

namespace {

enum class Tok { kIri, kPname, kVar, kString, kNumber, kWord, kPunct, kBlank, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
  std::string lang;      // for strings
  std::string datatype;  // for strings; raw IRI or pname text
  bool datatype_is_pname = false;
};

const std::set<std::string>& unsupported_words() {
  static const std::set<std::string> words{
      "OPTIONAL", "FILTER",   "UNION",  "MINUS",  "GRAPH",    "SERVICE", "VALUES", "ORDER",    "GROUP",
      "LIMIT",    "OFFSET",   "HAVING", "BASE",   "CONSTRUCT", "ASK",    "DESCRIBE", "FROM",   "NAMED",
      "EXISTS",   "NOT",      "REDUCED", "INSERT", "DELETE",  "LOAD",    "CLEAR",  "BY",       "REGEX",
      "CONTAINS", "STRSTARTS", "STRBEFORE", "CONCAT", "LANG", "DATATYPE", "IRI",   "URI",      "COUNT",
      "SUM",      "MIN",      "MAX",    "AVG",    "SAMPLE",   "GROUP_CONCAT", "IF", "COALESCE", "BOUND",
      "SUBSTR",   "UCASE",    "LCASE",  "STRLEN", "ISIRI",    "ISBLANK", "ISLITERAL"};
  return words;
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

bool is_name_start(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || c == '_' || u >= 0x80;
}

bool is_name_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '-' || u >= 0x80;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) {
        out.push_back(Token{Tok::kEnd, "", pos_, {}, {}});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string pname_local() {
    std::string out;
    while (is_name_char(peek()) || peek() == '.' || peek() == ':' || peek() == '%') {
      if (peek() == '.' && !is_name_char(peek(1)) && peek(1) != ':') break;
      out += peek();
      ++pos_;
    }
    return out;
  }

  std::string quoted() {
    std::size_t start = pos_;
    char quote = peek();
    bool longq = peek(1) == quote && peek(2) == quote;
    pos_ += longq ? 3 : 1;
    std::string value;
    for (;;) {
      if (pos_ >= text_.size()) throw SyntaxError(start, "unterminated string");
      char c = text_[pos_];
      if (longq && c == quote && peek(1) == quote && peek(2) == quote) {
        pos_ += 3;
        return value;
      }
      if (!longq && c == quote) {
        ++pos_;
        return value;
      }
      if (!longq && (c == '\n' || c == '\r')) throw SyntaxError(pos_, "newline in string");
      if (c == '\\') {
        char e = peek(1);
        pos_ += 2;
        switch (e) {
          case 't': value += '\t'; break;
          case 'n': value += '\n'; break;
          case 'r': value += '\r'; break;
          case 'b': value += '\b'; break;
          case 'f': value += '\f'; break;
          case '"': value += '"'; break;
          case '\'': value += '\''; break;
          case '\\': value += '\\'; break;
          default: throw SyntaxError(pos_ - 2, "bad escape in string");
        }
        continue;
      }
      value += c;
      ++pos_;
    }
  }

  Token next() {
    std::size_t start = pos_;
    char c = peek();
    if (c == '<') {
      auto close = text_.find('>', pos_);
      if (close == std::string_view::npos) throw SyntaxError(start, "unterminated IRI");
      std::string iri(text_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      return Token{Tok::kIri, iri, start, {}, {}};
    }
    if (c == '?' || c == '$') {
      ++pos_;
      std::string name;
      while (is_name_char(peek()) && peek() != '-') name += text_[pos_++];
      if (name.empty()) throw SyntaxError(start, "empty variable name");
      return Token{Tok::kVar, name, start, {}, {}};
    }
    if (c == '"' || c == '\'') {
      Token t{Tok::kString, quoted(), start, {}, {}};
      if (peek() == '@') {
        ++pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-') t.lang += text_[pos_++];
        if (!rdf::is_language_tag(t.lang)) throw SyntaxError(start, "bad language tag");
      } else if (peek() == '^' && peek(1) == '^') {
        pos_ += 2;
        if (peek() == '<') {
          auto close = text_.find('>', pos_);
          if (close == std::string_view::npos) throw SyntaxError(pos_, "unterminated IRI");
          t.datatype = std::string(text_.substr(pos_ + 1, close - pos_ - 1));
          pos_ = close + 1;
        } else {
          std::string prefix;
          while (is_name_char(peek())) prefix += text_[pos_++];
          if (peek() != ':') throw SyntaxError(pos_, "expected datatype");
          ++pos_;
          t.datatype = prefix + ":" + pname_local();
          t.datatype_is_pname = true;
        }
      }
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '-' || c == '+') && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      std::string num(1, c);
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) ||
             (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
        num += text_[pos_++];
      }
      return Token{Tok::kNumber, num, start, {}, {}};
    }
    if (c == '_' && peek(1) == ':') return Token{Tok::kBlank, "_:", start, {}, {}};
    if (is_name_start(c) || c == ':') {
      std::string word;
      while (is_name_char(peek())) word += text_[pos_++];
      if (peek() == ':') {
        ++pos_;
        return Token{Tok::kPname, word + ":" + pname_local(), start, {}, {}};
      }
      return Token{Tok::kWord, word, start, {}, {}};
    }
    ++pos_;
    return Token{Tok::kPunct, std::string(1, c), start, {}, {}};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  SelectQuery run() {
    prologue();
    select_clause();
    if (word_is("WHERE")) ++i_;
    group();
    if (cur().kind != Tok::kEnd) {
      if (cur().kind == Tok::kWord) unsupported_or_syntax(cur());
      throw SyntaxError(cur().offset, "unexpected '" + cur().text + "' after WHERE clause");
    }
    finish();
    return std::move(q_);
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  bool word_is(const char* w) const { return cur().kind == Tok::kWord && upper(cur().text) == w; }
  bool punct_is(char c) const { return cur().kind == Tok::kPunct && cur().text[0] == c; }

  [[noreturn]] void unsupported_or_syntax(const Token& t) const {
    std::string u = upper(t.text);
    if (unsupported_words().count(u)) throw UnsupportedFeature(u);
    throw SyntaxError(t.offset, "unexpected '" + t.text + "'");
  }

  void expect_punct(char c) {
    if (!punct_is(c)) {
      if (cur().kind == Tok::kWord) unsupported_or_syntax(cur());
      throw SyntaxError(cur().offset, std::string("expected '") + c + "'");
    }
    ++i_;
  }

  void prologue() {
    for (;;) {
      if (word_is("PREFIX")) {
        ++i_;
        if (cur().kind != Tok::kPname || cur().text.back() != ':' ||
            cur().text.find(':') != cur().text.size() - 1) {
          throw SyntaxError(cur().offset, "expected prefix label");
        }
        std::string label = cur().text.substr(0, cur().text.size() - 1);
        ++i_;
        if (cur().kind != Tok::kIri) throw SyntaxError(cur().offset, "expected IRI after prefix label");
        q_.prefixes[label] = cur().text;
        ++i_;
      } else if (word_is("BASE")) {
        throw UnsupportedFeature("BASE");
      } else {
        return;
      }
    }
  }

  void select_clause() {
    if (!word_is("SELECT")) {
      if (cur().kind == Tok::kWord) unsupported_or_syntax(cur());
      throw SyntaxError(cur().offset, "expected SELECT");
    }
    ++i_;
    if (word_is("DISTINCT")) ++i_;
    if (punct_is('*')) {
      star_ = true;
      ++i_;
      return;
    }
    while (cur().kind == Tok::kVar) {
      q_.variables.push_back(cur().text);
      ++i_;
    }
    if (punct_is('(')) throw UnsupportedFeature("select expression");
    if (q_.variables.empty()) throw SyntaxError(cur().offset, "SELECT needs '*' or variables");
  }

  void group() {
    expect_punct('{');
    while (!punct_is('}')) {
      if (cur().kind == Tok::kEnd) throw SyntaxError(cur().offset, "unterminated group");
      if (word_is("BIND")) {
        bind();
      } else if (cur().kind == Tok::kWord && !word_is("a") && !word_is("true") && !word_is("false")) {
        unsupported_or_syntax(cur());
      } else if (punct_is('{')) {
        throw UnsupportedFeature("nested group");
      } else {
        triples_block();
      }
      if (punct_is('.')) ++i_;
    }
    ++i_;
  }

  rdf::Term resolve_pname(const Token& t) const {
    auto colon = t.text.find(':');
    auto it = q_.prefixes.find(t.text.substr(0, colon));
    if (it == q_.prefixes.end()) throw SyntaxError(t.offset, "undeclared prefix '" + t.text.substr(0, colon) + "'");
    std::string local = t.text.substr(colon + 1);
    std::string unescaped;
    for (std::size_t k = 0; k < local.size(); ++k) {
      if (local[k] == '\\' && k + 1 < local.size()) ++k;
      unescaped += local[k];
    }
    try {
      return rdf::Term::iri(it->second + unescaped);
    } catch (const Error& e) {
      throw SyntaxError(t.offset, e.what());
    }
  }

  rdf::Term make_iri(const Token& t) const {
    try {
      return rdf::Term::iri(t.text);
    } catch (const Error&) {
      throw SyntaxError(t.offset, "relative or malformed IRI <" + t.text + ">");
    }
  }

  PatternTerm term(bool predicate_position) {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::kVar:
        ++i_;
        return Variable{t.text};
      case Tok::kIri:
        ++i_;
        return make_iri(t);
      case Tok::kPname:
        ++i_;
        return resolve_pname(t);
      case Tok::kBlank:
        throw UnsupportedFeature("blank node in pattern");
      case Tok::kString: {
        if (predicate_position) throw SyntaxError(t.offset, "literal in predicate position");
        ++i_;
        if (!t.lang.empty()) return rdf::Term(rdf::Literal::tagged(t.text, t.lang));
        if (!t.datatype.empty()) {
          Token dt{t.datatype_is_pname ? Tok::kPname : Tok::kIri, t.datatype, t.offset, {}, {}};
          rdf::Term dterm = t.datatype_is_pname ? resolve_pname(dt) : make_iri(dt);
          return rdf::Term(rdf::Literal::typed(t.text, rdf::Iri(dterm.value())));
        }
        return rdf::Term::literal(t.text);
      }
      case Tok::kNumber: {
        if (predicate_position) throw SyntaxError(t.offset, "literal in predicate position");
        ++i_;
        bool decimal = t.text.find('.') != std::string::npos;
        return rdf::Term(rdf::Literal::typed(t.text, rdf::Iri(std::string(decimal ? rdf::xsd::kDecimal
                                                                                       : rdf::xsd::kInteger))));
      }
      case Tok::kWord:
        if (t.text == "a" && predicate_position) {
          ++i_;
          return rdf::Term::iri(std::string(rdf::rdfns::kType));
        }
        if ((t.text == "true" || t.text == "false") && !predicate_position) {
          ++i_;
          return rdf::Term(rdf::Literal::typed(t.text, rdf::Iri(std::string(rdf::xsd::kBoolean))));
        }
        unsupported_or_syntax(t);
      case Tok::kPunct:
        if (t.text == "[" || t.text == "(") throw UnsupportedFeature(t.text == "[" ? "blank node in pattern" : "collection");
        if (predicate_position && (t.text == "^" || t.text == "!")) throw UnsupportedFeature("property path");
        throw SyntaxError(t.offset, "unexpected '" + t.text + "'");
      case Tok::kEnd:
        break;
    }
    throw SyntaxError(t.offset, "unexpected end of query");
  }

  void check_path_operator() const {
    if (cur().kind == Tok::kPunct) {
      char c = cur().text[0];
      if (c == '/' || c == '|' || c == '*' || c == '+' || c == '?' || c == '^') throw UnsupportedFeature("property path");
    }
  }

  void triples_block() {
    PatternTerm subject = term(false);
    for (;;) {
      PatternTerm predicate = term(true);
      check_path_operator();
      for (;;) {
        PatternTerm object = term(false);
        q_.patterns.push_back(TriplePattern{subject, predicate, object});
        if (!punct_is(',')) break;
        ++i_;
      }
      if (!punct_is(';')) break;
      while (punct_is(';')) ++i_;
      if (punct_is('.') || punct_is('}')) break;
    }
  }

  Expression expression() {
    const Token& t = cur();
    if (t.kind == Tok::kVar) {
      ++i_;
      return Expression{Expression::Op::kVariable, t.text, {}};
    }
    if (t.kind == Tok::kString) {
      if (!t.lang.empty() || !t.datatype.empty()) throw UnsupportedFeature("typed literal in expression");
      ++i_;
      return Expression{Expression::Op::kLiteral, t.text, {}};
    }
    if (t.kind == Tok::kWord) {
      std::string u = upper(t.text);
      if (u == "STR" || u == "STRAFTER") {
        ++i_;
        expect_punct('(');
        Expression e{u == "STR" ? Expression::Op::kStr : Expression::Op::kStrAfter, {}, {}};
        e.args.push_back(expression());
        if (e.op == Expression::Op::kStrAfter) {
          expect_punct(',');
          e.args.push_back(expression());
        }
        expect_punct(')');
        return e;
      }
      unsupported_or_syntax(t);
    }
    if (t.kind == Tok::kPname || t.kind == Tok::kIri) throw UnsupportedFeature("function call " + t.text);
    throw SyntaxError(t.offset, "expected expression");
  }

  void bind() {
    ++i_;
    expect_punct('(');
    Bind b;
    b.expression = expression();
    if (!word_is("AS")) throw SyntaxError(cur().offset, "expected AS in BIND");
    ++i_;
    if (cur().kind != Tok::kVar) throw SyntaxError(cur().offset, "expected variable after AS");
    b.target = cur().text;
    std::size_t offset = cur().offset;
    ++i_;
    expect_punct(')');
    if (pattern_vars().count(b.target)) throw SyntaxError(offset, "BIND target ?" + b.target + " already in scope");
    for (const auto& other : q_.binds) {
      if (other.target == b.target) throw SyntaxError(offset, "BIND target ?" + b.target + " already in scope");
    }
    q_.binds.push_back(std::move(b));
  }

  std::set<std::string> pattern_vars() const {
    std::set<std::string> out;
    auto add = [&](const PatternTerm& t) {
      if (const auto* v = std::get_if<Variable>(&t)) out.insert(v->name);
    };
    for (const auto& p : q_.patterns) {
      add(p.subject);
      add(p.predicate);
      add(p.object);
    }
    return out;
  }

  void finish() {
    std::set<std::string> known = pattern_vars();
    for (const auto& b : q_.binds) known.insert(b.target);
    if (star_) {
      std::set<std::string> seen;
      auto add = [&](const PatternTerm& t) {
        if (const auto* v = std::get_if<Variable>(&t); v && seen.insert(v->name).second) q_.variables.push_back(v->name);
      };
      for (const auto& p : q_.patterns) {
        add(p.subject);
        add(p.predicate);
        add(p.object);
      }
      for (const auto& b : q_.binds) {
        if (seen.insert(b.target).second) q_.variables.push_back(b.target);
      }
      return;
    }
    std::set<std::string> projected;
    for (const auto& v : q_.variables) {
      if (!known.count(v)) throw SyntaxError(0, "projected variable ?" + v + " does not occur in WHERE");
      if (!projected.insert(v).second) throw SyntaxError(0, "variable ?" + v + " projected twice");
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  bool star_ = false;
  SelectQuery q_;
};

}  // namespace

SelectQuery parse_query(std::string_view text) { return Parser(Lexer(text).run()).run(); }

}  // namespace caskbridge::sparql
