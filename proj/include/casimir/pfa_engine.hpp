#pragma once

#include <functional>
#include <string>

#include "casimir/geometry.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

/// Plane-plane energy per unit area as a function of the local gap,
/// the substrate of every proximity-force computation.  Must be pure and
/// reentrant: the integrators evaluate it from multiple quadrature nodes.
/// All shipped profiles are negative for every l > 0 (attractive regime).
struct PlatePlateEnergyProfile {
  std::function<double(double)> evaluate;  ///< l [m] -> energy/area [J/m^2]
  std::string label;
};

/// Ideal zero-temperature perfect-conductor profile.
PlatePlateEnergyProfile ideal_profile();

namespace pfa {

/// Radial map of the eccentric-cylinder annulus.  theta is measured from
/// the inner-cylinder axis; the offset eps is carried signed internally
/// (the energy is even in eps, which the differentiation stencils exploit),
/// all public entry points take validated geometries with eps >= 0.
///
///   r(theta)      = sqrt(b^2 - eps^2 cos^2 theta) + eps sin theta
///   gap(theta)    = r(theta) - a > 0
///   dA_eff/dtheta = L sqrt(a b + eps a sin theta)   (geometric mean of the
///                   two opposing surface elements)
/// The minimum gap b - a - eps sits at theta = 3 pi/2.
struct GapProfile {
  double a, b, L, eps;

  static GapProfile from(const EccentricCylinders& g) {
    return GapProfile{g.a, g.b, g.L, g.eps};
  }

  double outer_radius(double theta) const;
  double gap(double theta) const { return outer_radius(theta) - a; }
  double area_density(double theta) const;
};

struct Options {
  double rel_tol = 1e-9;    ///< quadrature relative tolerance
  int max_intervals = 20000;
};

/// Interaction energy E_I = Int_0^{2pi} dA_eff(theta) prof(gap(theta)) dtheta.
/// Near eps_tilde -> 1 the integrand peaks sharply at theta = 3 pi/2 over a
/// width ~ sqrt(2 d/(b-a)); the integrator pre-splits around the peak there.
QuadratureResult interaction_energy(const EccentricCylinders& g,
                                    const PlatePlateEnergyProfile& prof,
                                    const Options& opts = {});

/// Force along increasing eps, F = -dE_I/deps, by Richardson-extrapolated
/// central differences of interaction_energy.  Step h = max(1e-4 d, 1e-3 eps);
/// evaluations at negative offsets use the evenness of E_I.  Positive values
/// push the inner cylinder further off axis.  Throws StencilOutOfDomain when
/// eps + h would reach b - a.
QuadratureResult force_from_energy(const EccentricCylinders& g,
                                   const PlatePlateEnergyProfile& prof,
                                   const Options& opts = {});

/// Leading-order force integral for the ideal profile,
///   |F| = (pi^2 hbar c L a / 240 (b-a)^4) |I(et)|,
///   I(et) = Int_0^{2pi} sin t (1 + et sin t)^-4 dt,
/// evaluated by quadrature.  Sign convention as force_from_energy.
double force_integral_leading_order(const EccentricCylinders& g,
                                    const Options& opts = {});

/// Strip area element for the cylinder-plane proximity force.
enum class StripAreaMode {
  PlainSurface,   ///< dA = L a dtheta (reproduces the closed-form integral)
  GeometricMean,  ///< dA = L a sqrt(cos theta) dtheta
};

/// Cylinder-plane proximity force F = -d/dd of the strip energy
/// Int_{-pi/2}^{pi/2} dA(theta) prof(d + a(1 - cos theta)), negative
/// (attractive) for all shipped profiles.
QuadratureResult cylinder_plane_pfa(const CylinderPlane& g,
                                    const PlatePlateEnergyProfile& prof,
                                    StripAreaMode mode = StripAreaMode::PlainSurface,
                                    const Options& opts = {});

}  // namespace pfa
}  // namespace casimir
