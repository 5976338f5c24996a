#pragma once

#include <stdexcept>
#include <string>

namespace qtoda {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& what) : Error("division by zero: " + what) {}
};

// An intermediate object grew past the configured term budget.
struct ResourceLimit : Error {
  explicit ResourceLimit(const std::string& what) : Error("term budget exceeded: " + what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

// A substitution landed on a zero of a denominator.
struct PoleError : Error {
  explicit PoleError(const std::string& what) : Error("pole hit: " + what) {}
};

// An operator application needs series coefficients past the stored truncation.
struct TruncationError : Error {
  explicit TruncationError(const std::string& what) : Error("truncation exhausted: " + what) {}
};

}  // namespace qtoda
