#pragma once

#include <stdexcept>

namespace photon {

// Invalid arguments or violated preconditions (bad index, non-unit axis, inadmissible generator, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Evaluation outside the domain of a field or stencil.
struct DomainError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Quadrature, extrapolation or truncation failed its convergence gate.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace photon
