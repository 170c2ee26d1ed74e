#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

/// Two parallel conducting plates of area A at separation d.
struct ParallelPlates {
  double A;  ///< plate area [m^2]
  double d;  ///< separation [m]
};

/// Sphere of radius R facing a plane at closest separation d.
struct SpherePlane {
  double R;  ///< sphere radius [m]
  double d;  ///< closest separation [m]
};

/// Cylinder of radius a and length L parallel to a plane, closest gap d.
struct CylinderPlane {
  double a;  ///< cylinder radius [m]
  double L;  ///< cylinder length [m]
  double d;  ///< closest separation [m]
};

/// Inner cylinder of radius a inside a hollow cylinder of radius b, both of
/// length L, with axes parallel and offset by eps.  The force on the inner
/// cylinder points along increasing eps (the coaxial position is unstable).
struct EccentricCylinders {
  double a;    ///< inner radius [m]
  double b;    ///< outer (hollow) radius [m]
  double L;    ///< common length [m]
  double eps;  ///< distance between the two axes [m], 0 <= eps < b-a

  /// Axis offset normalized to the coaxial gap, in [0, 1).
  double eps_tilde() const { return eps / (b - a); }
  /// Minimum surface-to-surface distance d = b - a - eps.
  double gap() const { return b - a - eps; }
  double eps_over_b() const { return eps / b; }
};

using Geometry =
    std::variant<ParallelPlates, SpherePlane, CylinderPlane, EccentricCylinders>;

struct ValidationReport {
  bool ok = true;
  std::optional<GeometryErrorCode> error;
  std::string error_message;
  std::vector<std::string> warnings;
};

/// Checks hard invariants (positive lengths, non-intersecting surfaces) and
/// attaches soft regime warnings: L/b < 50 (border effects), eps/b > 0.01
/// (leading-order expansion strained), eps_tilde > 0.5 (large eccentricity),
/// d/a or d/R > 0.1 (proximity approximation strained).  Warnings never
/// invalidate a geometry; regime judgment stays with the caller.
ValidationReport validate_geometry(const Geometry& g);

/// Throws GeometryError if validation reports a hard error.
void ensure_valid(const Geometry& g);

struct DerivedParameters {
  double eps_tilde;
  double gap_d;
  double eps_over_b;
};

DerivedParameters derived_parameters(const EccentricCylinders& g);

}  // namespace casimir
