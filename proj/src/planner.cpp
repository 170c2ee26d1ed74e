#include "casimir/planner.hpp"

#include <cmath>
#include <variant>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/ideal_forces.hpp"

namespace casimir::planner {

using constants::pi;

double casimir_spring_constant(const EccentricCylinders& g,
                               const lifshitz::DielectricModel& model,
                               lifshitz::ThermalState thermal,
                               const lifshitz::Options& opts) {
  ensure_valid(Geometry{g});
  if (std::holds_alternative<lifshitz::PerfectConductor>(model) &&
      thermal.T == 0.0) {
    return ideal::f0_magnitude(g) / (g.b - g.a);
  }
  const double curvature =
      lifshitz::second_derivative_energy_pp(g.b - g.a, model, thermal, opts);
  return pi * g.L * g.a * std::abs(curvature);
}

FrequencyShiftResult frequency_shift(const EccentricCylinders& g,
                                     const ResonatorSpec& res,
                                     const lifshitz::DielectricModel& model,
                                     lifshitz::ThermalState thermal,
                                     const lifshitz::Options& opts) {
  if (!(res.M > 0.0) || !(res.omega0 > 0.0)) {
    throw std::invalid_argument("resonator mass and frequency must be positive");
  }
  const double k = casimir_spring_constant(g, model, thermal, opts);
  const double relative = k / (res.M * res.omega0 * res.omega0);
  if (relative >= 0.5) {
    throw ShiftTooLarge(
        "spring constant comparable to the resonator stiffness; the "
        "small-shift linearization does not apply");
  }
  FrequencyShiftResult out{-0.5 * relative, k, {}};
  if (!(std::holds_alternative<lifshitz::PerfectConductor>(model) &&
        thermal.T == 0.0)) {
    out.notes.push_back(
        "spring constant from the corrected energy curvature pi L a "
        "|d2E/dl2|, an extension of the ideal-conductor estimate");
  }
  return out;
}

GeometryComparison compare_geometries(const Scenario& s) {
  const ParallelPlates pp{s.A, s.d};
  const CylinderPlane cp{s.a, s.L, s.d};
  const SpherePlane sp{s.R, s.d};
  const double f_pp = ideal::force_pp(pp);
  const double f_cp = ideal::force_cylinder_plane(cp);
  const double f_sp = ideal::force_sphere_plane(sp);
  const auto ratios = ideal::force_ratios(pp, cp, sp);
  return GeometryComparison{f_pp, f_cp, f_sp, ratios.pp_over_cp,
                            ratios.cp_over_sp};
}

}  // namespace casimir::planner
