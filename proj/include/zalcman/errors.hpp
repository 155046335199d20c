#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zalcman {

/// A truncated series is shorter than an operation needs.
class LengthError : public std::length_error {
 public:
  LengthError(const std::string& what, std::size_t required)
      : std::length_error(what + " (required order " + std::to_string(required) + ")"),
        required_(required) {}

  std::size_t required_order() const noexcept { return required_; }

 private:
  std::size_t required_;
};

/// Class parameter, query or config outside its admissible range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Atomic measure that is not a probability measure (or not symmetric when it must be).
class MeasureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SymmetryError : public MeasureError {
 public:
  using MeasureError::MeasureError;
};

/// The requested class has no measure representation, or the operation does not cover it.
class UnsupportedClassError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mixture weights violate their constraint.
class MixtureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace zalcman
