#include "caskbridge/json/value.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>

namespace caskbridge::json {

Json::Json(Object o) {
  for (std::size_t i = 0; i < o.size(); ++i) {
    for (std::size_t j = i + 1; j < o.size(); ++j) {
      if (o[i].first == o[j].first) throw TypeError("duplicate member name '" + o[i].first + "'");
    }
  }
  value_ = std::move(o);
}

bool Json::as_bool() const {
  if (!is_bool()) throw TypeError("not a boolean");
  return std::get<bool>(value_);
}

const std::string& Json::number_text() const {
  if (!is_number()) throw TypeError("not a number");
  return std::get<Number>(value_).text;
}

const std::string& Json::as_string() const {
  if (!is_string()) throw TypeError("not a string");
  return std::get<std::string>(value_);
}

const Json::Array& Json::as_array() const {
  if (!is_array()) throw TypeError("not an array");
  return std::get<Array>(value_);
}

Json::Array& Json::as_array() {
  if (!is_array()) throw TypeError("not an array");
  return std::get<Array>(value_);
}

const Json::Object& Json::as_object() const {
  if (!is_object()) throw TypeError("not an object");
  return std::get<Object>(value_);
}

Json::Object& Json::as_object() {
  if (!is_object()) throw TypeError("not an object");
  return std::get<Object>(value_);
}

const Json* Json::find(std::string_view name) const {
  if (!is_object()) return nullptr;
  for (const auto& [key, value] : std::get<Object>(value_)) {
    if (key == name) return &value;
  }
  return nullptr;
}

Json* Json::find(std::string_view name) {
  return const_cast<Json*>(std::as_const(*this).find(name));
}

std::string_view Json::string_member(std::string_view name) const {
  const Json* member = find(name);
  return member && member->is_string() ? std::string_view(member->as_string()) : std::string_view();
}

void Json::push_back(Json value) { as_array().push_back(std::move(value)); }

bool Json::add_member(std::string name, Json value) {
  auto& members = as_object();
  if (find(name)) return false;
  members.emplace_back(std::move(name), std::move(value));
  return true;
}

bool equivalent(const Json& a, const Json& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::kArray: {
      const auto& x = a.as_array();
      const auto& y = b.as_array();
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (!equivalent(x[i], y[i])) return false;
      }
      return true;
    }
    case Kind::kObject: {
      const auto& x = a.as_object();
      if (x.size() != b.as_object().size()) return false;
      return std::all_of(x.begin(), x.end(), [&](const Json::Member& m) {
        const Json* other = b.find(m.first);
        return other && equivalent(m.second, *other);
      });
    }
    default:
      return a == b;
  }
}

namespace {

// Builds a Json tree from nlohmann's SAX events so that number lexemes and
// member order survive exactly.
class TreeBuilder : public nlohmann::json_sax<nlohmann::json> {
 public:
  explicit TreeBuilder(std::string_view text) : text_(text) {}

  bool null() override { return put(Json()); }
  bool boolean(bool value) override { return put(Json(value)); }
  bool number_integer(number_integer_t value) override { return put(Json::number(std::to_string(value))); }
  bool number_unsigned(number_unsigned_t value) override { return put(Json::number(std::to_string(value))); }
  bool number_float(number_float_t, const string_t& text) override { return put(Json::number(text)); }
  bool string(string_t& value) override { return put(Json(std::move(value))); }
  bool binary(binary_t&) override { return false; }

  bool start_object(std::size_t) override {
    stack_.push_back(Json::object());
    return true;
  }
  bool key(string_t& name) override {
    keys_.push_back(std::move(name));
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override {
    stack_.push_back(Json::array());
    return true;
  }
  bool end_array() override { return close(); }

  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) override {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < position && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = ex.what();
    auto colon = what.rfind(": ");
    throw ParseError(line, column, colon == std::string::npos ? what : what.substr(colon + 2));
  }

  Json take() { return std::move(root_); }

 private:
  bool close() {
    Json done = std::move(stack_.back());
    stack_.pop_back();
    return put(std::move(done));
  }

  bool put(Json value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return true;
    }
    Json& parent = stack_.back();
    if (parent.is_array()) {
      parent.push_back(std::move(value));
      return true;
    }
    std::string name = std::move(keys_.back());
    keys_.pop_back();
    if (Json* existing = parent.find(name)) {
      *existing = std::move(value);
    } else {
      parent.as_object().emplace_back(std::move(name), std::move(value));
    }
    return true;
  }

  std::string_view text_;
  std::vector<Json> stack_;
  std::vector<std::string> keys_;
  Json root_;
};

void write(const Json& v, std::string& out, int depth) {
  auto indent = [&](int d) { out.append(static_cast<std::size_t>(d) * 2, ' '); };
  switch (v.kind()) {
    case Kind::kNull: out += "null"; break;
    case Kind::kBool: out += v.as_bool() ? "true" : "false"; break;
    case Kind::kNumber: out += v.number_text(); break;
    case Kind::kString: out += '"' + escape_json_string(v.as_string()) + '"'; break;
    case Kind::kArray: {
      const auto& items = v.as_array();
      if (items.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      for (std::size_t i = 0; i < items.size(); ++i) {
        indent(depth + 1);
        write(items[i], out, depth + 1);
        out += i + 1 < items.size() ? ",\n" : "\n";
      }
      indent(depth);
      out += "]";
      break;
    }
    case Kind::kObject: {
      const auto& members = v.as_object();
      if (members.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      for (std::size_t i = 0; i < members.size(); ++i) {
        indent(depth + 1);
        out += '"' + escape_json_string(members[i].first) + "\": ";
        write(members[i].second, out, depth + 1);
        out += i + 1 < members.size() ? ",\n" : "\n";
      }
      indent(depth);
      out += "}";
      break;
    }
  }
}

}  // namespace

Json parse_json(std::string_view text) {
  TreeBuilder builder(text);
  nlohmann::json::sax_parse(text, &builder);
  return builder.take();
}

std::string write_json(const Json& value) {
  std::string out;
  write(value, out, 0);
  out += "\n";
  return out;
}

std::string escape_json_string(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned char>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace caskbridge::json
