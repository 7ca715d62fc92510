#pragma once

#include <stdexcept>
#include <string>

namespace gjs {

// Malformed input: bad graph spec, unknown vertex, inconsistent degrees.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

// Iterative numerics failed to converge.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input lies outside the set of cases the library can decide.
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gjs
