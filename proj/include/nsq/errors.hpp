#pragma once

#include <stdexcept>

namespace nsq {

// Thrown when a computation leaves its numerical domain at runtime
// (empty post-selected sector, vanishing estimator slope, division by a
// zero variance). Violated call preconditions use std::invalid_argument
// instead, so callers can tell misuse apart from out-of-domain inputs.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nsq
