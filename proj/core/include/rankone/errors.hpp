#pragma once

#include <stdexcept>
#include <string>

namespace rankone {

/// Raised when a numerical procedure cannot meet its accuracy contract:
/// series that fail to converge within the iteration cap, truncation tails
/// above tolerance, ill-conditioned fits, resonant spectral parameters.
///
/// Invalid arguments (violated preconditions) use std::invalid_argument.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rankone
