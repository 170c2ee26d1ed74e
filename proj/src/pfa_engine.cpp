#include "casimir/pfa_engine.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/ideal_forces.hpp"

namespace casimir {

using constants::hbar_c;
using constants::pi;

PlatePlateEnergyProfile ideal_profile() {
  return PlatePlateEnergyProfile{
      [](double l) { return ideal::energy_per_area_pp(l); },
      "ideal perfect-conductor T=0",
  };
}

namespace pfa {

double GapProfile::outer_radius(double theta) const {
  const double ct = std::cos(theta);
  return std::sqrt(b * b - eps * eps * ct * ct) + eps * std::sin(theta);
}

double GapProfile::area_density(double theta) const {
  return L * std::sqrt(a * b + eps * a * std::sin(theta));
}

namespace {

constexpr double kPeakTheta = 1.5 * pi;  // location of the minimum gap

// Breakpoints for the theta integral.  The quarter splits are always
// present; when the gap closes (et large) extra points bracket the peak at
// 3 pi/2 so the first refinement generation already resolves it.
std::vector<double> theta_breakpoints(double eps_tilde, double peak_width) {
  std::vector<double> pts = {0.0, 0.5 * pi, pi, 1.5 * pi, 2.0 * pi};
  if (eps_tilde > 0.9 && peak_width > 0.0) {
    for (double w = peak_width; w < 0.5 * pi; w *= 2.0) {
      pts.push_back(kPeakTheta - w);
      pts.push_back(kPeakTheta + w);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

quad::Options quad_options(const Options& opts) {
  return quad::Options{opts.rel_tol, 0.0, opts.max_intervals};
}

// E_I for a possibly signed offset; even in eps.
QuadratureResult energy_signed(double a, double b, double L, double eps,
                               const PlatePlateEnergyProfile& prof,
                               const Options& opts) {
  const GapProfile gp{a, b, L, std::abs(eps)};
  const double et = gp.eps / (b - a);
  const double d = b - a - gp.eps;
  const double width = std::sqrt(2.0 * d / (b - a));
  const auto integrand = [&gp, &prof](double theta) {
    const double e = prof.evaluate(gp.gap(theta));
    assert(e < 0.0 && "plane-plane profiles must be attractive");
    return gp.area_density(theta) * e;
  };
  const auto pts = theta_breakpoints(et, width);
  return quad::integrate_segmented(integrand, pts, quad_options(opts));
}

}  // namespace

QuadratureResult interaction_energy(const EccentricCylinders& g,
                                    const PlatePlateEnergyProfile& prof,
                                    const Options& opts) {
  ensure_valid(Geometry{g});
  return energy_signed(g.a, g.b, g.L, g.eps, prof, opts);
}

QuadratureResult force_from_energy(const EccentricCylinders& g,
                                   const PlatePlateEnergyProfile& prof,
                                   const Options& opts) {
  ensure_valid(Geometry{g});
  const double d = g.gap();
  const double h = std::max(1e-4 * d, 1e-3 * g.eps);
  if (!(g.eps + h < g.b - g.a)) {
    throw StencilOutOfDomain(
        "force_from_energy: eps too close to b-a for the difference stencil");
  }

  const auto energy_at = [&](double eps) {
    return energy_signed(g.a, g.b, g.L, eps, prof, opts);
  };

  // central differences at h and h/2, Richardson-combined
  const QuadratureResult ep1 = energy_at(g.eps + h);
  const QuadratureResult em1 = energy_at(g.eps - h);
  const QuadratureResult ep2 = energy_at(g.eps + 0.5 * h);
  const QuadratureResult em2 = energy_at(g.eps - 0.5 * h);

  const double d1 = (ep1.value - em1.value) / (2.0 * h);
  const double d2 = (ep2.value - em2.value) / h;
  const double deriv = (4.0 * d2 - d1) / 3.0;

  const double err_d1 = (ep1.abs_error + em1.abs_error) / (2.0 * h);
  const double err_d2 = (ep2.abs_error + em2.abs_error) / h;
  const double err =
      std::abs(d2 - d1) / 3.0 + (4.0 * err_d2 + err_d1) / 3.0;

  return QuadratureResult{
      -deriv, err,
      ep1.evaluations + em1.evaluations + ep2.evaluations + em2.evaluations};
}

double force_integral_leading_order(const EccentricCylinders& g,
                                    const Options& opts) {
  ensure_valid(Geometry{g});
  const double et = g.eps_tilde();
  const auto integrand = [et](double theta) {
    const double s = std::sin(theta);
    const double base = 1.0 + et * s;
    return s / (base * base * base * base);
  };
  const double width = std::sqrt(2.0 * std::max(1.0 - et, 0.0));
  const auto pts = theta_breakpoints(et, width);
  // the integrand is dimensionless and O(1); the absolute floor keeps the
  // relative criterion meaningful when the integral vanishes (eps = 0) and
  // sits above the aggregate roundoff floor of the panel estimates
  quad::Options qopts = quad_options(opts);
  qopts.abs_tol = 1e-12;
  const QuadratureResult I = quad::integrate_segmented(integrand, pts, qopts);
  const double gap = g.b - g.a;
  const double prefactor =
      pi * pi * hbar_c * g.L * g.a / (240.0 * gap * gap * gap * gap);
  return -prefactor * I.value;  // I < 0 for eps > 0: destabilizing-positive
}

QuadratureResult cylinder_plane_pfa(const CylinderPlane& g,
                                    const PlatePlateEnergyProfile& prof,
                                    StripAreaMode mode, const Options& opts) {
  ensure_valid(Geometry{g});

  const auto strip_energy = [&](double d) {
    const auto integrand = [&](double theta) {
      const double gap = d + g.a * (1.0 - std::cos(theta));
      const double area = (mode == StripAreaMode::PlainSurface)
                              ? g.L * g.a
                              : g.L * g.a * std::sqrt(std::cos(theta));
      return area * prof.evaluate(gap);
    };
    // symmetric in theta: integrate the facing half twice
    QuadratureResult r =
        quad::integrate(integrand, 0.0, 0.5 * pi, quad_options(opts));
    return QuadratureResult{2.0 * r.value, 2.0 * r.abs_error, r.evaluations};
  };

  const double h = 1e-3 * g.d;
  const QuadratureResult ep1 = strip_energy(g.d + h);
  const QuadratureResult em1 = strip_energy(g.d - h);
  const QuadratureResult ep2 = strip_energy(g.d + 0.5 * h);
  const QuadratureResult em2 = strip_energy(g.d - 0.5 * h);

  const double d1 = (ep1.value - em1.value) / (2.0 * h);
  const double d2 = (ep2.value - em2.value) / h;
  const double deriv = (4.0 * d2 - d1) / 3.0;
  const double err_d1 = (ep1.abs_error + em1.abs_error) / (2.0 * h);
  const double err_d2 = (ep2.abs_error + em2.abs_error) / h;
  const double err = std::abs(d2 - d1) / 3.0 + (4.0 * err_d2 + err_d1) / 3.0;

  return QuadratureResult{
      -deriv, err,
      ep1.evaluations + em1.evaluations + ep2.evaluations + em2.evaluations};
}

}  // namespace pfa
}  // namespace casimir
