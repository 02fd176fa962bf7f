#pragma once

#include <stdexcept>
#include <string>

namespace kantichain {

/// Invalid arguments: bad dimensions, out-of-range parameters, refused budgets.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure could not meet its contract (stagnation, unresolved
/// tolerance, quadrature budget).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kantichain
