#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "casimir/pfa_engine.hpp"
#include "casimir/threading.hpp"

namespace casimir::lifshitz {

/// Ideal mirror: unit reflection for both polarizations at every frequency.
struct PerfectConductor {};

/// Lossless metal, eps(i xi) = 1 + omega_p^2 / xi^2.
struct Plasma {
  double omega_p;  ///< plasma frequency [rad/s]
};

/// Same dielectric function, but the transverse-electric n=0 Matsubara term
/// is dropped entirely (the competing thermal-correction prescription).
struct PlasmaNoTEZero {
  double omega_p;  ///< plasma frequency [rad/s]
};

/// Tabulated permittivity on the imaginary frequency axis, eps(i xi).
/// Rows must have strictly increasing xi, eps > 1, and eps non-increasing.
/// In range, eps is interpolated log-log in (xi, eps-1).  Above the table,
/// eps -> 1 as 1 + C/xi^2 with C fitted to the last two rows.  Below the
/// table the Tabulated model extends with 1 + omega_p^2/xi^2 when a
/// low-frequency plasma frequency is supplied, and refuses otherwise.
class PermittivityTable {
 public:
  PermittivityTable(std::vector<double> xi, std::vector<double> eps);

  /// eps(i xi) for xi >= xi_min(); throws TableRangeExceeded below.
  double eps_at(double xi) const;

  double xi_min() const { return xi_.front(); }
  double xi_max() const { return xi_.back(); }
  std::size_t size() const { return xi_.size(); }
  const std::vector<double>& xi() const { return xi_; }
  const std::vector<double>& eps() const { return eps_; }

 private:
  std::vector<double> xi_, eps_;
  std::vector<double> log_xi_, log_epsm1_;
  double high_tail_c_;  // eps ~ 1 + C/xi^2 above the table
};

struct Tabulated {
  PermittivityTable table;
  std::optional<double> low_freq_omega_p;  ///< [rad/s]
};

using DielectricModel =
    std::variant<PerfectConductor, Plasma, PlasmaNoTEZero, Tabulated>;

struct ThermalState {
  double T = 0.0;  ///< temperature [K], >= 0
};

struct Options {
  double k_rel_tol = 1e-10;   ///< tolerance of each k-integral
  double term_epsilon = 1e-12;  ///< Matsubara term cutoff, relative to total
  int consecutive_small = 5;  ///< terms below cutoff required to stop
  long n_max = 1000000;       ///< hard cap on the Matsubara index
  double u_span = 50.0;       ///< k-integral window after u = 2 q l mapping
  Exec exec = Exec::Parallel;
  double stencil_rel_step = 1e-3;  ///< for the l-derivative stencils
};

/// Free energy per unit area of two identical half-spaces at gap l and
/// temperature T.  Standard Lifshitz formula, reconstructed, in Matsubara
/// form:
///
///   E(l,T) = (kT/2pi) Sum'_{n>=0} Int_0^inf k dk
///            [ ln(1 - r_TM^2 e^{-2 q_n l}) + ln(1 - r_TE^2 e^{-2 q_n l}) ]
///
/// with xi_n = 2 pi n kT/hbar, q_n^2 = k^2 + xi_n^2/c^2,
/// k_n^2 = k^2 + eps(i xi_n) xi_n^2/c^2, r_TM = (eps q_n - k_n)/(eps q_n + k_n),
/// r_TE = (q_n - k_n)/(q_n + k_n); the primed sum halves the n=0 term.
/// Each k-integral is evaluated after the substitution u = 2 q_n l, which
/// maps it to (1/4l^2) Int_{u_n}^{u_n+U} u [...] du with u_n = 2 xi_n l/c;
/// the truncation at U = 50 leaves a relative tail below e^-50.
///
/// n=0 limits: the plasma family has r_TM = 1 and
/// r_TE = (k - sqrt(k^2 + omega_p^2/c^2)) / (k + sqrt(k^2 + omega_p^2/c^2));
/// PlasmaNoTEZero zeroes the TE term.  The perfect conductor keeps
/// r_TM^2 = r_TE^2 = 1 at every n.
///
/// T = 0 takes a dedicated branch: the perfect conductor returns the
/// analytic -pi^2 hbar c/(720 l^3); dispersive models integrate over
/// continuous imaginary frequency, (hbar/2pi) Int dxi replacing kT Sum'.
/// Dispersive models below 1 K route to the T = 0 branch (the sum spacing
/// becomes wastefully fine there).
///
/// Matsubara terms are independent; the Parallel policy evaluates them in
/// blocks and reduces in index order, so results are bit-identical to the
/// Serial policy.
double free_energy_pp(double l, const DielectricModel& model,
                      ThermalState thermal, const Options& opts = {});

/// -d(free energy)/dl by a 5-point stencil; negative (attractive) for all
/// shipped models.
double pressure_pp(double l, const DielectricModel& model, ThermalState thermal,
                   const Options& opts = {});

/// d^2 E / dl^2 by a 5-point stencil; for the ideal model equals
/// -pi^2 hbar c / (60 l^5).
double second_derivative_energy_pp(double l, const DielectricModel& model,
                                   ThermalState thermal,
                                   const Options& opts = {});

/// Wraps (model, thermal) as a gap -> energy/area profile for the
/// proximity-force integrators.
PlatePlateEnergyProfile make_profile(const DielectricModel& model,
                                     ThermalState thermal,
                                     const Options& opts = {});

std::string model_label(const DielectricModel& model);

/// Conventional gold plasma frequency, 9.0 eV expressed in rad/s.  A
/// literature convention (CLI-overridable), not a fitted value.
double gold_plasma_frequency();

}  // namespace casimir::lifshitz
