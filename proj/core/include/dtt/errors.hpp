#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dtt {

/// Bad argument to a builder or operation (n = 0, zero denominator, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact integer kernel numerator would not fit in a double's 53-bit mantissa.
class ParameterOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// The family takes no (p, q, r) triple, or the triple is missing.
class NotParameterized : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ShapeMismatch : public std::invalid_argument {
 public:
  ShapeMismatch(const std::string& what, std::size_t expected, std::size_t actual)
      : std::invalid_argument(what + ": expected " + std::to_string(expected) +
                              ", got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// Raised by the inverse transform when the Gram check fails.
class NotOrthogonal : public std::runtime_error {
 public:
  explicit NotOrthogonal(double deviation);

  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

}  // namespace dtt
