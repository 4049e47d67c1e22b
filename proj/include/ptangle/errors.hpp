#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptangle {

// Bad input: malformed text, arity or dimension mismatch. CLI exit code 1.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : ValidationError {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : ValidationError(what + " at position " + std::to_string(pos)), position(pos) {}
};

// A size guard refused the computation. CLI exit code 2.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A theoretical invariant failed to hold (NotMonomial, PhaseIncoherent). CLI exit code 3.
struct CoherenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ptangle
