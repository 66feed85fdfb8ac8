#pragma once

#include <stdexcept>
#include <string>

namespace macpieri {

// Division by a zero value, or evaluation at a pole of a reduced rational function.
struct ArithmeticError : std::domain_error {
  using std::domain_error::domain_error;
};

// Malformed or degenerate input parameters.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Two independent computations of the same quantity disagree.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// A degree bound was exceeded.
struct DegreeError : std::length_error {
  using std::length_error::length_error;
};

}  // namespace macpieri
