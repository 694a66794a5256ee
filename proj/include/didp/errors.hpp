#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace didp {

struct DidpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the s-expression and YAML front ends.
struct ParseError : DidpError {
  ParseError(std::size_t position, const std::string& reason)
      : DidpError("parse error at " + std::to_string(position) + ": " + reason),
        position(position),
        reason(reason) {}
  explicit ParseError(const std::string& reason)
      : DidpError("parse error: " + reason), position(0), reason(reason) {}
  std::size_t position;
  std::string reason;
};

// Raised during expression evaluation (division by zero, index out of range).
struct EvalError : DidpError {
  using DidpError::DidpError;
};

// Raised when a YAML template cannot be grounded.
struct GroundingError : DidpError {
  using DidpError::DidpError;
};

// Raised by benchmark builders on malformed instances.
struct InvalidInstance : DidpError {
  using DidpError::DidpError;
};

// An edge weight evaluated negative, violating the cost algebra.
struct NegativeEdgeWeight : DidpError {
  NegativeEdgeWeight(const std::string& transition, const std::string& detail)
      : DidpError("negative edge weight on transition '" + transition + "': " + detail),
        transition(transition) {}
  std::string transition;
};

}  // namespace didp
