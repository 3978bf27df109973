#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "caskbridge/json/value.hpp"

namespace caskbridge::json {

class UnsupportedSyntax : public Error {
 public:
  explicit UnsupportedSyntax(const std::string& fragment)
      : Error("unsupported JSONPath syntax: '" + fragment + "'"), fragment_(fragment) {}
  const std::string& fragment() const { return fragment_; }

 private:
  std::string fragment_;
};

class PathSyntaxError : public Error {
 public:
  PathSyntaxError(std::size_t offset, const std::string& message)
      : Error("JSONPath offset " + std::to_string(offset) + ": " + message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace step {
struct Root {
  friend bool operator==(const Root&, const Root&) = default;
};
struct Child {
  std::string name;
  friend bool operator==(const Child&, const Child&) = default;
};
struct Wildcard {
  friend bool operator==(const Wildcard&, const Wildcard&) = default;
};
struct Index {
  std::size_t index;
  friend bool operator==(const Index&, const Index&) = default;
};
/// `..name`: every `name` member at any depth, pre-order.
struct RecursiveDescent {
  std::string name;
  friend bool operator==(const RecursiveDescent&, const RecursiveDescent&) = default;
};
/// `[?(@.field=='literal')]`: children whose string member `field` equals `literal`.
struct Filter {
  std::string field;
  std::string literal;
  friend bool operator==(const Filter&, const Filter&) = default;
};
}  // namespace step

using Step = std::variant<step::Root, step::Child, step::Wildcard, step::Index, step::RecursiveDescent, step::Filter>;

struct PathExpr {
  std::vector<Step> steps;
  std::string source;

  friend bool operator==(const PathExpr& a, const PathExpr& b) { return a.steps == b.steps; }
};

/// One concrete path segment: a member name or an array index.
using Segment = std::variant<std::string, std::size_t>;
using Location = std::vector<Segment>;

/// A match of a path against a document. `value` points into the evaluated
/// document and is valid as long as that document is alive and unmodified.
struct PathMatch {
  Location location;
  const Json* value;
};

/// Compiles the supported subset: `$`, `.name`, `['name']`, `[*]` (and `.*`),
/// `[n]`, `..name`, `[?(@.name=='literal')]`.
PathExpr compile_path(std::string_view expr);

/// All matches in document order.
std::vector<PathMatch> evaluate_path(const Json& doc, const PathExpr& path);

/// Follows `location` from `doc`; nullptr if any segment is missing.
const Json* navigate(const Json& doc, const Location& location);
Json* navigate(Json& doc, const Location& location);

class TargetNotFound : public Error {
 public:
  explicit TargetNotFound(const std::string& location) : Error("insertion target not found: " + location) {}
};

class TargetNotContainer : public Error {
 public:
  explicit TargetNotContainer(const std::string& location)
      : Error("insertion target is neither array nor object: " + location) {}
};

class DuplicateMemberName : public Error {
 public:
  explicit DuplicateMemberName(const std::string& name)
      : Error("member '" + name + "' already exists in target object"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Inserts `child` at `location` in place. Arrays get `child` appended;
/// objects get the members of `child` (which must be a single-member object)
/// added.
void insert_into(Json& doc, const Location& location, Json child);

/// Value-returning form of insert_into.
Json insert_at(Json doc, const Location& location, Json child);

/// Renders a location as a JSONPath, e.g. `$['submodels'][0]`.
std::string to_string(const Location& location);

}  // namespace caskbridge::json
