#pragma once

#include <stdexcept>
#include <string>

namespace twave {

/// Invalid input: bad grid, out-of-range parameter, violated precondition.
/// The CLI maps this to exit code 2.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation that started but could not finish: divergence, no
/// convergence, singular operator. The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twave
