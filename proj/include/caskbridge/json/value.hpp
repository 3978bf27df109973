#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "caskbridge/error.hpp"

namespace caskbridge::json {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("JSON line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class TypeError : public Error {
 public:
  using Error::Error;
};

enum class Kind { kNull, kBool, kNumber, kString, kArray, kObject };

/// A JSON value. Numbers keep their exact source text; object members keep
/// their insertion order and names are unique within one object.
class Json {
 public:
  struct Number {
    std::string text;
    friend bool operator==(const Number&, const Number&) = default;
  };
  using Array = std::vector<Json>;
  using Member = std::pair<std::string, Json>;
  using Object = std::vector<Member>;

  Json() = default;
  Json(std::nullptr_t) {}  // NOLINT(google-explicit-constructor)
  Json(bool b) : value_(b) {}  // NOLINT(google-explicit-constructor)
  Json(std::string s) : value_(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  Json(const char* s) : value_(std::string(s)) {}  // NOLINT(google-explicit-constructor)
  Json(Number n) : value_(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  Json(Array a) : value_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Json(Object o);  // NOLINT(google-explicit-constructor)

  static Json number(std::string text) { return Json(Number{std::move(text)}); }
  static Json array() { return Json(Array{}); }
  static Json object() { return Json(Object{}); }

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  bool is_null() const { return kind() == Kind::kNull; }
  bool is_bool() const { return kind() == Kind::kBool; }
  bool is_number() const { return kind() == Kind::kNumber; }
  bool is_string() const { return kind() == Kind::kString; }
  bool is_array() const { return kind() == Kind::kArray; }
  bool is_object() const { return kind() == Kind::kObject; }

  bool as_bool() const;
  const std::string& number_text() const;
  const std::string& as_string() const;
  const Array& as_array() const;
  Array& as_array();
  const Object& as_object() const;
  Object& as_object();

  /// Member lookup; nullptr when this is not an object or has no such member.
  const Json* find(std::string_view name) const;
  Json* find(std::string_view name);

  /// Convenience for string members: empty view when absent or not a string.
  std::string_view string_member(std::string_view name) const;

  /// Appends to an array. Throws TypeError otherwise.
  void push_back(Json value);

  /// Adds a member to an object. Returns false (and leaves the object
  /// unchanged) if the name already exists. Throws TypeError for non-objects.
  bool add_member(std::string name, Json value);

  /// Structural equality, order-sensitive everywhere.
  friend bool operator==(const Json&, const Json&) = default;

 private:
  std::variant<std::nullptr_t, bool, Number, std::string, Array, Object> value_;
};

/// Equality where object member order is ignored and array order is not.
bool equivalent(const Json& a, const Json& b);

/// Parses any standard JSON text. A repeated member name keeps the last value
/// at the position of the first occurrence.
Json parse_json(std::string_view text);

/// Canonical writer: 2-space indentation, members in stored order, only the
/// escapes JSON requires, non-ASCII written as UTF-8.
std::string write_json(const Json& value);

/// Escapes `text` as the body of a JSON string (no surrounding quotes).
std::string escape_json_string(std::string_view text);

}  // namespace caskbridge::json
