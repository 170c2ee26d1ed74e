#pragma once

#include <string>
#include <vector>

#include "casimir/geometry.hpp"
#include "casimir/lifshitz.hpp"

namespace casimir::planner {

/// Mechanical resonator carrying the hollow cylinder.
struct ResonatorSpec {
  double M;       ///< effective mass [kg]
  double omega0;  ///< natural angular frequency [rad/s]
};

/// Inverted-spring magnitude of the eccentric-cylinder force per unit
/// offset, k_C = |F|/eps.  Ideal perfect-conductor at T=0 uses the exact
/// F0/(b-a); other (model, T) combinations use the curvature form
/// pi L a |d^2 E_pp/dl^2| at l = b-a.
double casimir_spring_constant(const EccentricCylinders& g,
                               const lifshitz::DielectricModel& model,
                               lifshitz::ThermalState thermal,
                               const lifshitz::Options& opts = {});

struct FrequencyShiftResult {
  double shift;                 ///< Delta omega / omega0, negative
  double spring_constant;       ///< k_C [N/m]
  std::vector<std::string> notes;
};

/// Relative frequency shift of the resonator around the coaxial position,
/// Delta omega/omega0 = -k_C/(2 M omega0^2).  The destabilizing spring
/// softens the resonator, so the shift is always negative.  Requires
/// k_C/(M omega0^2) < 0.5 (small-shift linearization); throws ShiftTooLarge
/// otherwise.
FrequencyShiftResult frequency_shift(const EccentricCylinders& g,
                                     const ResonatorSpec& res,
                                     const lifshitz::DielectricModel& model,
                                     lifshitz::ThermalState thermal,
                                     const lifshitz::Options& opts = {});

/// One experimental scenario shared by the three single-gap geometries.
struct Scenario {
  double A;  ///< plate area [m^2]
  double a;  ///< cylinder radius [m]
  double R;  ///< sphere radius [m]
  double L;  ///< cylinder length [m]
  double d;  ///< common separation [m]
};

struct GeometryComparison {
  double F_pp, F_cp, F_sp;  ///< ideal forces [N], attractive (negative)
  double pp_over_cp, cp_over_sp;
};

/// Ideal force table plus the two strength ratios for a common separation.
GeometryComparison compare_geometries(const Scenario& s);

}  // namespace casimir::planner
