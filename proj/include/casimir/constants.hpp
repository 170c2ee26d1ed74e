#pragma once

#include <numbers>

namespace casimir {

/// Fundamental constants, CODATA 2018, SI units throughout.
///
/// h, c, k_B and e are exact by the 2019 SI redefinition; hbar is derived
/// from the exact h at full double precision, eps0 carries the published
/// measured value.  All force and energy routines in this library take
/// lengths in meters and return newtons / joules; there is no unit
/// conversion below the CLI layer.
struct PhysicalConstants {
  double hbar;             ///< reduced Planck constant [J s]
  double c;                ///< speed of light in vacuum [m/s]
  double k_B;              ///< Boltzmann constant [J/K]
  double eps0;             ///< vacuum permittivity [F/m]
  double electron_charge;  ///< elementary charge [C], for eV -> rad/s

  static constexpr PhysicalConstants codata2018() {
    return PhysicalConstants{
        6.62607015e-34 / (2.0 * std::numbers::pi),  // hbar
        299792458.0,                                // c
        1.380649e-23,                               // k_B
        8.8541878128e-12,                           // eps0
        1.602176634e-19,                            // e
    };
  }
};

namespace constants {

inline constexpr PhysicalConstants si = PhysicalConstants::codata2018();

inline constexpr double pi = std::numbers::pi;
inline constexpr double hbar = si.hbar;
inline constexpr double c = si.c;
inline constexpr double k_B = si.k_B;
inline constexpr double eps0 = si.eps0;
inline constexpr double electron_charge = si.electron_charge;
inline constexpr double hbar_c = hbar * c;  // [J m]

/// Plasma frequency conversion: photon energy in eV -> angular frequency.
inline constexpr double ev_to_rad_per_s(double ev) {
  return ev * electron_charge / hbar;
}

}  // namespace constants

}  // namespace casimir
