#include "casimir/ideal_forces.hpp"

#include <cmath>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::ideal {

using constants::hbar_c;
using constants::pi;

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::vector<std::string> geometry_warnings(const EccentricCylinders& g) {
  return validate_geometry(Geometry{g}).warnings;
}

}  // namespace

double energy_per_area_pp(double l) {
  if (!(l > 0.0)) {
    throw GeometryError(GeometryErrorCode::NonPositiveLength,
                        "plate separation l must be positive");
  }
  return -pi * pi * hbar_c / (720.0 * l * l * l);
}

double force_pp(const ParallelPlates& g) {
  ensure_valid(Geometry{g});
  const double d2 = g.d * g.d;
  return -pi * pi * hbar_c * g.A / (240.0 * d2 * d2);
}

double f0_magnitude(const EccentricCylinders& g) {
  const double gap = g.b - g.a;
  const double gap4 = gap * gap * gap * gap;
  return pi * pi * pi * hbar_c * g.L * g.a / (60.0 * gap4);
}

IdealForceResult force_eccentric_closed_form(const EccentricCylinders& g) {
  ensure_valid(Geometry{g});
  const double et = g.eps_tilde();
  if (et >= 1.0) {
    throw GeometryError(GeometryErrorCode::SurfacesIntersect,
                        "eccentricity out of range: eps_tilde must be < 1");
  }
  const double f0 = f0_magnitude(g);
  const double reduced =
      et * (1.0 + 0.25 * et * et) / std::pow(1.0 - et * et, 3.5);
  return IdealForceResult{reduced * f0, EccentricFormula::ClosedForm, f0,
                          geometry_warnings(g)};
}

IdealForceResult force_eccentric_small(const EccentricCylinders& g) {
  ensure_valid(Geometry{g});
  const double et = g.eps_tilde();
  const double f0 = f0_magnitude(g);
  IdealForceResult res{et * f0, EccentricFormula::SmallEccentricity, f0,
                       geometry_warnings(g)};
  if (et >= 0.2) {
    res.warnings.push_back("eps_tilde=" + fmt(et) +
                           ": linearized form degrades above ~0.2");
  }
  return res;
}

IdealForceResult force_eccentric_large(const EccentricCylinders& g) {
  ensure_valid(Geometry{g});
  const double d = g.gap();
  if (!(d > 0.0)) {
    throw GeometryError(GeometryErrorCode::SurfacesIntersect,
                        "degenerate gap: b-a-eps must be positive");
  }
  const double et = g.eps_tilde();
  const double f0 = f0_magnitude(g);
  const double ratio = (g.b - g.a) / d;
  const double force = 5.0 / (32.0 * std::sqrt(2.0)) * std::pow(ratio, 3.5) * f0;
  IdealForceResult res{force, EccentricFormula::LargeEccentricity, f0,
                       geometry_warnings(g)};
  if (et <= 0.8) {
    res.warnings.push_back("eps_tilde=" + fmt(et) +
                           ": large-eccentricity asymptote degrades below ~0.8");
  }
  return res;
}

double force_cylinder_plane(const CylinderPlane& g, CylinderPlaneForm form) {
  ensure_valid(Geometry{g});
  if (form == CylinderPlaneForm::Asymptotic) {
    return -pi * pi * pi * hbar_c * g.L * std::sqrt(g.a) /
           (384.0 * std::sqrt(2.0) * std::pow(g.d, 3.5));
  }
  const double x = g.d / g.a;
  const auto integrand = [x](double t) {
    const double base = 1.0 + x - std::cos(t);
    return 1.0 / (base * base * base * base);
  };
  const QuadratureResult J =
      quad::integrate(integrand, 0.0, 0.5 * pi, {.rel_tol = 1e-12});
  return -pi * pi * hbar_c * g.L / (120.0 * g.a * g.a * g.a) * J.value;
}

double force_sphere_plane(const SpherePlane& g) {
  ensure_valid(Geometry{g});
  return -pi * pi * pi * hbar_c * g.R / (360.0 * g.d * g.d * g.d);
}

ForceRatios force_ratios(const ParallelPlates& pp, const CylinderPlane& cp,
                         const SpherePlane& sp) {
  ensure_valid(Geometry{pp});
  ensure_valid(Geometry{cp});
  ensure_valid(Geometry{sp});
  if (pp.d != cp.d || cp.d != sp.d) {
    throw GeometryError(GeometryErrorCode::MismatchedSeparation,
                        "mismatched separation: the three geometries must "
                        "share the same d");
  }
  const double pref1 = 384.0 * std::sqrt(2.0) / (240.0 * pi);
  const double pref2 = 360.0 / (384.0 * std::sqrt(2.0));
  const double d = pp.d;
  return ForceRatios{
      pref1 * pp.A / (cp.L * std::sqrt(cp.a * d)),
      pref2 * (cp.L / sp.R) * std::sqrt(cp.a / d),
      pref1,
      pref2,
  };
}

}  // namespace casimir::ideal
