#pragma once

#include <stdexcept>

namespace aoitour {

// Thrown when an instance exceeds a solver's hard size cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aoitour
