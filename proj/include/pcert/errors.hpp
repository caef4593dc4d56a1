#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace pcert {

/// Malformed expression, rational literal or job text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// An input violates a documented invariant of the operation it was passed to.
/// `invariant()` names the violated condition.
class PreconditionError : public std::invalid_argument {
public:
  PreconditionError(std::string invariant, const std::string& message)
      : std::invalid_argument(message), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

private:
  std::string invariant_;
};

/// A job or report field is missing, mistyped or inconsistent. `field()` is a
/// JSON path such as "theta[1].terms[0].exp".
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

} // namespace pcert
