#pragma once

#include "casimir/geometry.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::electrostatics {

/// Eccentric cylinders held at potential difference V (inner at 0, outer at
/// V).  Like the Casimir force, the electrostatic force is destabilizing:
/// positive along increasing axis offset.
struct ElectrostaticConfig {
  EccentricCylinders geometry;
  double V;  ///< [volts]
};

/// First-order-in-eps/b potential in the gap:
///   phi(r,theta) = V/log(b/a) [ log(r/a) - eps (r^2-a^2)/(b^2-a^2) sin(theta)/r ]
/// Exactly 0 on r = a; equals V on the outer wall up to second order in the
/// offset (for narrow gaps the boundary defect grows as (eps/(b-a))^2).
/// Throws PointOutsideGap (as GeometryError) for r outside [a, r(theta)].
double potential(const ElectrostaticConfig& config, double r, double theta);

struct GridSpec {
  int nr = 33;      ///< radial interior points per theta ray
  int ntheta = 64;  ///< theta samples over the full period
};

/// Max |laplacian(phi)| over the grid, in units of V/(b-a)^2.  Every term of
/// the potential is harmonic, so the residual is pure stencil discretization
/// and shrinks second order under grid refinement.
double laplace_residual(const ElectrostaticConfig& config,
                        const GridSpec& grid = {});

/// Proximity electrostatic energy
///   U = (1/2) eps0 V^2 L a Int_0^{2pi} dtheta / (r(theta) - a),
/// which for small eps/b collapses to pi eps0 V^2 L a / ((b-a) sqrt(1-et^2)).
QuadratureResult electrostatic_energy_pfa(const ElectrostaticConfig& config,
                                          double rel_tol = 1e-10);

/// Small-offset closed form eps0 pi V^2 L a eps/(b-a)^3 (linear in eps; the
/// constant-voltage spring constant eps0 pi V^2 L a/(b-a)^3 used to plan a
/// counterbias).  Degrades as (3/2) et^2 relative.
double force_closed_form(const ElectrostaticConfig& config);

/// Leading order in eps/b at finite et: the linear form times
/// (1 - et^2)^{-3/2}, i.e. d/deps of the closed-form proximity energy.
double force_leading_order(const ElectrostaticConfig& config);

/// Constant-voltage force +dU/deps (battery work included) by
/// Richardson-extrapolated central differences of the proximity energy.
QuadratureResult force_quadrature(const ElectrostaticConfig& config,
                                  double rel_tol = 1e-10);

}  // namespace casimir::electrostatics
