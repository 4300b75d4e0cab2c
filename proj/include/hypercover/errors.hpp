#pragma once

#include <stdexcept>
#include <string>

namespace hypercover {

/// Bad argument to an operation (out-of-range m, k, n and the like).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation's mathematical precondition does not hold on the given
/// instance, e.g. a construction for matching number 2 applied to an
/// instance with matching number 3.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that cannot be parsed or a certificate that references objects
/// outside the ambient hypergraph.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance too large for an enumeration or LP size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Always a defect in this library, never a
/// property of the input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hypercover
