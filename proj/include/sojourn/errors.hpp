#pragma once

#include <stdexcept>
#include <string>

namespace sojourn {

// Bad time index into a path (std::out_of_range keeps the usual semantics).
using IndexError = std::out_of_range;

// Precondition on an argument violated by the caller.
using ArgumentError = std::invalid_argument;

// Requested work exceeds a configured limit (e.g. enumeration cap).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact identity that must hold did not; indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A computation produced nothing usable (e.g. zero accepted samples).
class DegenerateOutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sojourn
