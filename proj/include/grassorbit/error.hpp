#pragma once

#include <stdexcept>
#include <string>

namespace grassorbit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input, shape or range violations, mismatched operands.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// An algebraic precondition failed: division by zero, a singular
/// generator, a rank-deficient basis, a non-unit multiplier.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

}  // namespace grassorbit
