#pragma once

#include <stdexcept>

namespace rmt {

// Parameter or input outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Too few usable data points to perform a requested estimate or fit.
struct InsufficientDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rmt
