#include "casimir/geometry.hpp"

#include <cmath>
#include <sstream>

namespace casimir {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

void check_positive(ValidationReport& rep, double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    rep.ok = false;
    rep.error = GeometryErrorCode::NonPositiveLength;
    rep.error_message = std::string(name) + " must be positive and finite";
  }
}

void warn_pfa_gap(ValidationReport& rep, double d, double r, const char* rname) {
  if (d / r > 0.1) {
    rep.warnings.push_back("d/" + std::string(rname) + "=" + fmt(d / r) +
                           ": proximity approximation strained (d/" + rname +
                           " > 0.1)");
  }
}

struct Validator {
  ValidationReport operator()(const ParallelPlates& g) const {
    ValidationReport rep;
    check_positive(rep, g.A, "A");
    check_positive(rep, g.d, "d");
    return rep;
  }

  ValidationReport operator()(const SpherePlane& g) const {
    ValidationReport rep;
    check_positive(rep, g.R, "R");
    check_positive(rep, g.d, "d");
    if (rep.ok) warn_pfa_gap(rep, g.d, g.R, "R");
    return rep;
  }

  ValidationReport operator()(const CylinderPlane& g) const {
    ValidationReport rep;
    check_positive(rep, g.a, "a");
    check_positive(rep, g.L, "L");
    check_positive(rep, g.d, "d");
    if (rep.ok) warn_pfa_gap(rep, g.d, g.a, "a");
    return rep;
  }

  ValidationReport operator()(const EccentricCylinders& g) const {
    ValidationReport rep;
    check_positive(rep, g.a, "a");
    check_positive(rep, g.b, "b");
    check_positive(rep, g.L, "L");
    if (!rep.ok) return rep;
    if (g.eps < 0.0 || !std::isfinite(g.eps)) {
      rep.ok = false;
      rep.error = GeometryErrorCode::NonPositiveLength;
      rep.error_message = "eps must be non-negative and finite";
      return rep;
    }
    if (g.a >= g.b) {
      rep.ok = false;
      rep.error = GeometryErrorCode::InnerNotInsideOuter;
      rep.error_message = "inner radius a must be smaller than outer radius b";
      return rep;
    }
    if (g.eps >= g.b - g.a) {
      rep.ok = false;
      rep.error = GeometryErrorCode::SurfacesIntersect;
      rep.error_message = "epsilon must be < b-a (surfaces touch or intersect)";
      return rep;
    }
    if (g.L / g.b < 45.0) {
      rep.warnings.push_back("L/b=" + fmt(g.L / g.b) +
                             ": finite-length border effects may matter (L/b < 45)");
    }
    if (g.eps_over_b() > 0.01) {
      rep.warnings.push_back("eps/b=" + fmt(g.eps_over_b()) +
                             ": beyond the leading-order regime (eps/b > 0.01)");
    }
    if (g.eps_tilde() > 0.5) {
      rep.warnings.push_back("eps_tilde=" + fmt(g.eps_tilde()) +
                             ": large eccentricity regime");
    }
    return rep;
  }
};

}  // namespace

ValidationReport validate_geometry(const Geometry& g) {
  return std::visit(Validator{}, g);
}

void ensure_valid(const Geometry& g) {
  ValidationReport rep = validate_geometry(g);
  if (!rep.ok) throw GeometryError(*rep.error, rep.error_message);
}

DerivedParameters derived_parameters(const EccentricCylinders& g) {
  return DerivedParameters{g.eps_tilde(), g.gap(), g.eps_over_b()};
}

}  // namespace casimir
