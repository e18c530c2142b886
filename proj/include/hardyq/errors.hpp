#pragma once

#include <stdexcept>

namespace hardyq {

// Thrown when a vector with norm at or below tolerance is normalized,
// e.g. when the two defining product terms of the state coincide.
struct DegenerateStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a measurement family has coinciding bases on either side.
struct ImproperFamilyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hardyq
