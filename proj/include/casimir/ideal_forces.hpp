#pragma once

#include <string>
#include <vector>

#include "casimir/geometry.hpp"

namespace casimir {
namespace ideal {

/// Which analytic expression produced an eccentric-cylinder force.
enum class EccentricFormula { ClosedForm, SmallEccentricity, LargeEccentricity };

/// Sign convention: `force` is the component along increasing axis offset
/// eps and is >= 0 (the coaxial equilibrium is unstable; the force pulls the
/// inner cylinder further off axis).  Plate-normal forces elsewhere in this
/// module are negative (attractive).
struct IdealForceResult {
  double force;            ///< [N], >= 0 along increasing eps
  EccentricFormula formula;
  double f0_magnitude;     ///< pi^3 hbar c L a / (60 (b-a)^4) [N]
  std::vector<std::string> warnings;
};

/// Zero-temperature perfect-conductor energy per unit area of parallel
/// plates at separation l:  -pi^2 hbar c / (720 l^3).
double energy_per_area_pp(double l);

/// Parallel-plate force -pi^2 hbar c A / (240 d^4), attractive (negative).
double force_pp(const ParallelPlates& g);

/// Natural force scale of the eccentric-cylinder problem:
/// pi^3 hbar c L a / (60 (b-a)^4), twice the parallel-plate force for the
/// equivalent area 2 pi a L at gap b-a.
double f0_magnitude(const EccentricCylinders& g);

/// Full closed form: |F| = F0 * et (1 + et^2/4) / (1 - et^2)^{7/2}.
IdealForceResult force_eccentric_closed_form(const EccentricCylinders& g);

/// Linearized small-offset form |F| = et * F0; the associated spring
/// constant is |F|/eps = F0/(b-a) (inverted harmonic oscillator).
IdealForceResult force_eccentric_small(const EccentricCylinders& g);

/// Large-eccentricity asymptote |F| = (5/(32 sqrt2)) ((b-a)/d)^{7/2} F0,
/// with d = b-a-eps the remaining gap.
IdealForceResult force_eccentric_large(const EccentricCylinders& g);

enum class CylinderPlaneForm {
  Asymptotic,  ///< -pi^3 hbar c L sqrt(a) / (384 sqrt2 d^{7/2}), valid d << a
  Integral,    ///< -(pi^2 hbar c L / 120 a^3) Int_0^{pi/2} (1+d/a-cos t)^-4 dt
};

/// Cylinder-plane force, attractive (negative).  The integral form is the
/// exact proximity expression over the plain cylinder surface element; the
/// asymptote is its d/a -> 0 limit.
double force_cylinder_plane(const CylinderPlane& g,
                            CylinderPlaneForm form = CylinderPlaneForm::Asymptotic);

/// Sphere-plane proximity force -pi^3 hbar c R / (360 d^3), attractive.
double force_sphere_plane(const SpherePlane& g);

struct ForceRatios {
  double pp_over_cp;
  double cp_over_sp;
  /// Analytic prefactors 384 sqrt2/(240 pi) and 360/(384 sqrt2); they round
  /// to 0.72 and 0.66.
  double pp_cp_prefactor;
  double cp_sp_prefactor;
};

/// Relative strengths of the three single-gap geometries at a common
/// separation d:  F_pp/F_cp = 0.72.. A/(L sqrt(a d)),
/// F_cp/F_sp = 0.66.. (L/R) sqrt(a/d).
/// Throws GeometryError if the three separations differ.
ForceRatios force_ratios(const ParallelPlates& pp, const CylinderPlane& cp,
                         const SpherePlane& sp);

}  // namespace ideal
}  // namespace casimir
