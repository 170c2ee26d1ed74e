#include "casimir/corrections.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/pfa_engine.hpp"

namespace casimir::corrections {

using constants::pi;

std::string to_string(GeometryKind kind) {
  switch (kind) {
    case GeometryKind::ParallelPlates: return "pp";
    case GeometryKind::SpherePlane: return "sp";
    case GeometryKind::CylinderPlane: return "cp";
    case GeometryKind::EccentricCylinders: return "ecc";
  }
  return "?";
}

double corrected_force_eccentric(const EccentricCylinders& g,
                                 const lifshitz::DielectricModel& model,
                                 lifshitz::ThermalState thermal,
                                 const lifshitz::Options& opts) {
  ensure_valid(Geometry{g});
  const double curvature =
      lifshitz::second_derivative_energy_pp(g.b - g.a, model, thermal, opts);
  return -g.eps * pi * g.L * g.a * curvature;
}

namespace {

double force_at(GeometryKind kind, const CurveParams& p, double d,
                const lifshitz::DielectricModel& model,
                lifshitz::ThermalState thermal, const lifshitz::Options& opts) {
  switch (kind) {
    case GeometryKind::ParallelPlates:
      return lifshitz::pressure_pp(d, model, thermal, opts) * p.A;
    case GeometryKind::SpherePlane:
      return 2.0 * pi * p.R * lifshitz::free_energy_pp(d, model, thermal, opts);
    case GeometryKind::CylinderPlane: {
      const auto prof = lifshitz::make_profile(model, thermal, opts);
      return pfa::cylinder_plane_pfa(CylinderPlane{p.a, p.L, d}, prof).value;
    }
    case GeometryKind::EccentricCylinders: {
      const EccentricCylinders g{p.a, p.a + d, p.L, p.eps_tilde * d};
      return corrected_force_eccentric(g, model, thermal, opts);
    }
  }
  return 0.0;
}

}  // namespace

CorrectionCurve correction_curve(GeometryKind kind, const CurveParams& params,
                                 const lifshitz::DielectricModel& model,
                                 lifshitz::ThermalState thermal,
                                 std::span<const double> d_grid, Exec exec,
                                 const lifshitz::Options& opts) {
  const lifshitz::DielectricModel ideal = lifshitz::PerfectConductor{};
  const lifshitz::ThermalState cold{0.0};

  CorrectionCurve curve{kind, lifshitz::model_label(model), thermal.T, {}};
  curve.rows.resize(d_grid.size());

  const auto fill_row = [&](std::size_t i) {
    const double d = d_grid[i];
    const double f_corr = force_at(kind, params, d, model, thermal, opts);
    const double f_ideal = force_at(kind, params, d, ideal, cold, opts);
    curve.rows[i] = CorrectionCurveRow{d, f_ideal, f_corr, f_corr / f_ideal};
  };

  if (exec == Exec::Parallel) {
    const long n = static_cast<long>(d_grid.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) fill_row(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < d_grid.size(); ++i) fill_row(i);
  }
  return curve;
}

double model_discrepancy(GeometryKind kind, const CurveParams& params, double d,
                         lifshitz::ThermalState thermal, double omega_p,
                         const lifshitz::Options& opts) {
  const double f_plasma =
      force_at(kind, params, d, lifshitz::Plasma{omega_p}, thermal, opts);
  const double f_note0 =
      force_at(kind, params, d, lifshitz::PlasmaNoTEZero{omega_p}, thermal, opts);
  return f_plasma / f_note0;
}

}  // namespace casimir::corrections
