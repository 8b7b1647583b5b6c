#ifndef CYCLIN_ERRORS_HPP
#define CYCLIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclin {

// Violated operation precondition (CLI exit code 1).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated structural invariant detected mid-computation (CLI exit code 2).
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cyclin

#endif
