#pragma once

#include <span>
#include <string>
#include <vector>

#include "casimir/geometry.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/threading.hpp"

namespace casimir::corrections {

enum class GeometryKind { ParallelPlates, SpherePlane, CylinderPlane, EccentricCylinders };

std::string to_string(GeometryKind kind);

/// Thermal + conductivity corrected eccentric-cylinder force for small
/// offsets:  F = -eps pi L a d^2E_pp/dl^2 |_{l=b-a}.  Positive along
/// increasing eps for every shipped model (the energy curvature is
/// negative).  The corrected/ideal ratio depends only on (b-a, model, T):
/// eps, L and a cancel.
double corrected_force_eccentric(const EccentricCylinders& g,
                                 const lifshitz::DielectricModel& model,
                                 lifshitz::ThermalState thermal,
                                 const lifshitz::Options& opts = {});

struct CorrectionCurveRow {
  double d;            ///< [m]
  double F_ideal;      ///< perfect conductor at T=0 [N]
  double F_corrected;  ///< requested model and temperature [N]
  double ratio;        ///< F_corrected / F_ideal
};

struct CorrectionCurve {
  GeometryKind kind;
  std::string model;
  double T;
  std::vector<CorrectionCurveRow> rows;
};

/// Fixed transverse parameters while d is swept.
struct CurveParams {
  double A = 1e-6;          ///< plate area [m^2]
  double R = 100e-6;        ///< sphere radius [m]
  double a = 100e-6;        ///< cylinder / inner-cylinder radius [m]
  double L = 5e-3;          ///< cylinder length [m]
  double eps_tilde = 0.1;   ///< eccentric offset fraction (ratio-invariant)
};

/// Corrected and ideal forces over a distance grid.  Plane-plane uses the
/// pressure times A; sphere-plane the energy-based proximity force
/// F = 2 pi R E_pp(d); cylinder-plane the strip integrator; eccentric
/// cylinders the curvature formula with the coaxial gap b-a swept as d.
/// The ideal column runs the same machinery with the perfect conductor at
/// T=0, so an ideal request yields ratio == 1 identically.  Rows are
/// independent and may be evaluated in parallel; their order follows d_grid.
CorrectionCurve correction_curve(GeometryKind kind, const CurveParams& params,
                                 const lifshitz::DielectricModel& model,
                                 lifshitz::ThermalState thermal,
                                 std::span<const double> d_grid,
                                 Exec exec = Exec::Parallel,
                                 const lifshitz::Options& opts = {});

/// F_corrected(Plasma) / F_corrected(PlasmaNoTEZero) at one distance: the
/// measurable gap between the two thermal-correction prescriptions.
double model_discrepancy(GeometryKind kind, const CurveParams& params, double d,
                         lifshitz::ThermalState thermal, double omega_p,
                         const lifshitz::Options& opts = {});

}  // namespace casimir::corrections
