#pragma once

#include <stdexcept>
#include <string>

namespace powertour {

// Malformed or out-of-contract input (dimension mismatch, n too small, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance too large for an exhaustive routine.
class SizeError : public InputError {
 public:
  using InputError::InputError;
};

// A construction failed its own certificate. Always a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace powertour
