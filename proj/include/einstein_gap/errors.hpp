#pragma once

#include <stdexcept>
#include <string>

namespace einstein_gap {

// Common base so callers can catch the whole library as one family.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
  using Error::Error;
};

// Requested Betti decomposition does not exist (parity or positivity).
struct NonRealizable : Error {
  using Error::Error;
};

// Polarization Gram matrix is not positive definite to working precision.
struct DegeneratePolarization : Error {
  using Error::Error;
};

// An internal cross-check failed; indicates a bug, not bad input.
struct InternalInconsistency : Error {
  using Error::Error;
};

struct SingularMetric : Error {
  using Error::Error;
};

// Finite-difference stencil would reach the chart puncture.
struct StepTooLarge : Error {
  using Error::Error;
};

struct QuadratureUnconverged : Error {
  using Error::Error;
};

}  // namespace einstein_gap
