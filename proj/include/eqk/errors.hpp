#pragma once

#include <stdexcept>

namespace eqk {

/// Malformed or out-of-contract input. The CLI maps it to exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal self-check failed (e.g. a free-basis expansion had no exact
/// solution). Always a bug; the CLI maps it to exit code 3.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eqk
