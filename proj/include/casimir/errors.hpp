#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Hard geometry invariant violations (maps to CLI exit code 2).
enum class GeometryErrorCode {
  NonPositiveLength,
  SurfacesIntersect,
  InnerNotInsideOuter,
  MismatchedSeparation,
};

class GeometryError : public std::invalid_argument {
 public:
  GeometryError(GeometryErrorCode code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  GeometryErrorCode code() const { return code_; }

 private:
  GeometryErrorCode code_;
};

/// Runtime numerical failures (maps to CLI exit code 1): quadrature or
/// Matsubara-sum non-convergence, finite-difference stencils leaving the
/// admissible domain, table lookups outside the covered range.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureNonConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SumNonConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class StencilOutOfDomain : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class TableRangeExceeded : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ShiftTooLarge : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace casimir
