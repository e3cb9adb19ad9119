#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace armsim {

/// Malformed scenario file (syntax, unknown keys, wrong arity).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed value violates a model invariant. Carries the field name.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::runtime_error("validation failed for '" + field + "': " + what),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Degenerate geometry, e.g. a contact query exactly at a sphere center.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace armsim
