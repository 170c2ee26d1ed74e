#include "casimir/electrostatics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/pfa_engine.hpp"

namespace casimir::electrostatics {

using constants::eps0;
using constants::pi;

namespace {

double outer_radius(const EccentricCylinders& g, double theta) {
  return pfa::GapProfile::from(g).outer_radius(theta);
}

double phi_raw(const EccentricCylinders& g, double V, double eps, double r,
               double theta) {
  const double log_term = std::log(r / g.a);
  const double dipole =
      eps * (r * r - g.a * g.a) / (g.b * g.b - g.a * g.a) * std::sin(theta) / r;
  return V / std::log(g.b / g.a) * (log_term - dipole);
}

// U(eps) for a possibly signed offset; even in eps.
QuadratureResult energy_signed(const EccentricCylinders& g, double V,
                               double eps, double rel_tol) {
  const pfa::GapProfile gp{g.a, g.b, g.L, std::abs(eps)};
  const double et = gp.eps / (g.b - g.a);
  std::vector<double> pts = {0.0, 0.5 * pi, pi, 1.5 * pi, 2.0 * pi};
  if (et > 0.9) {
    const double width = std::sqrt(2.0 * (g.b - g.a - gp.eps) / (g.b - g.a));
    for (double w = width; w < 0.5 * pi; w *= 2.0) {
      pts.push_back(1.5 * pi - w);
      pts.push_back(1.5 * pi + w);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  }
  const auto integrand = [&gp](double theta) { return 1.0 / gp.gap(theta); };
  QuadratureResult r = quad::integrate_segmented(
      integrand, pts, quad::Options{rel_tol, 0.0, 20000});
  const double pref = 0.5 * eps0 * V * V * g.L * g.a;
  return QuadratureResult{pref * r.value, pref * r.abs_error, r.evaluations};
}

}  // namespace

double potential(const ElectrostaticConfig& config, double r, double theta) {
  const EccentricCylinders& g = config.geometry;
  ensure_valid(Geometry{g});
  const double r_out = outer_radius(g, theta);
  const double tol = 1e-12 * g.b;
  if (r < g.a - tol || r > r_out + tol) {
    throw GeometryError(GeometryErrorCode::NonPositiveLength,
                        "point outside the gap: r must lie in [a, r(theta)]");
  }
  return phi_raw(g, config.V, g.eps, r, theta);
}

double laplace_residual(const ElectrostaticConfig& config,
                        const GridSpec& grid) {
  const EccentricCylinders& g = config.geometry;
  ensure_valid(Geometry{g});
  const double V = config.V != 0.0 ? config.V : 1.0;
  const double gap2 = (g.b - g.a) * (g.b - g.a);

  double worst = 0.0;
  const double dtheta = 2.0 * pi / grid.ntheta;
  for (int j = 0; j < grid.ntheta; ++j) {
    const double theta = j * dtheta;
    const double local_gap = outer_radius(g, theta) - g.a;
    const double hr = local_gap / (2.0 * (grid.nr + 1));
    const double ht = 0.5 * dtheta;
    for (int i = 1; i <= grid.nr; ++i) {
      const double r = g.a + i * local_gap / (grid.nr + 1);
      const auto phi = [&](double rr, double tt) {
        return phi_raw(g, V, g.eps, rr, tt);
      };
      const double p0 = phi(r, theta);
      const double d2r = (phi(r + hr, theta) - 2 * p0 + phi(r - hr, theta)) / (hr * hr);
      const double d1r = (phi(r + hr, theta) - phi(r - hr, theta)) / (2 * hr);
      const double d2t = (phi(r, theta + ht) - 2 * p0 + phi(r, theta - ht)) / (ht * ht);
      const double lap = d2r + d1r / r + d2t / (r * r);
      worst = std::max(worst, std::abs(lap) * gap2 / V);
    }
  }
  return worst;
}

QuadratureResult electrostatic_energy_pfa(const ElectrostaticConfig& config,
                                          double rel_tol) {
  ensure_valid(Geometry{config.geometry});
  return energy_signed(config.geometry, config.V, config.geometry.eps, rel_tol);
}

double force_closed_form(const ElectrostaticConfig& config) {
  const EccentricCylinders& g = config.geometry;
  ensure_valid(Geometry{g});
  const double gap = g.b - g.a;
  return eps0 * pi * config.V * config.V * g.L * g.a * g.eps /
         (gap * gap * gap);
}

double force_leading_order(const ElectrostaticConfig& config) {
  const double et = config.geometry.eps_tilde();
  return force_closed_form(config) / std::pow(1.0 - et * et, 1.5);
}

QuadratureResult force_quadrature(const ElectrostaticConfig& config,
                                  double rel_tol) {
  const EccentricCylinders& g = config.geometry;
  ensure_valid(Geometry{g});
  const double d = g.gap();
  const double h = std::max(1e-4 * d, 1e-3 * g.eps);
  if (!(g.eps + h < g.b - g.a)) {
    throw StencilOutOfDomain(
        "force_quadrature: eps too close to b-a for the difference stencil");
  }
  const auto U = [&](double eps) {
    return energy_signed(g, config.V, eps, rel_tol);
  };
  const QuadratureResult up1 = U(g.eps + h);
  const QuadratureResult um1 = U(g.eps - h);
  const QuadratureResult up2 = U(g.eps + 0.5 * h);
  const QuadratureResult um2 = U(g.eps - 0.5 * h);
  const double d1 = (up1.value - um1.value) / (2.0 * h);
  const double d2 = (up2.value - um2.value) / h;
  const double deriv = (4.0 * d2 - d1) / 3.0;  // +dU/deps at constant V
  const double err = std::abs(d2 - d1) / 3.0 +
                     (4.0 * (up2.abs_error + um2.abs_error) / h +
                      (up1.abs_error + um1.abs_error) / (2.0 * h)) /
                         3.0;
  return QuadratureResult{
      deriv, err,
      up1.evaluations + um1.evaluations + up2.evaluations + um2.evaluations};
}

}  // namespace casimir::electrostatics
