#include "casimir/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/ideal_forces.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::lifshitz {

using constants::c;
using constants::hbar;
using constants::hbar_c;
using constants::k_B;
using constants::pi;

// ---------------------------------------------------------------------------
// PermittivityTable

PermittivityTable::PermittivityTable(std::vector<double> xi,
                                     std::vector<double> eps)
    : xi_(std::move(xi)), eps_(std::move(eps)) {
  if (xi_.size() != eps_.size() || xi_.size() < 2) {
    throw std::invalid_argument(
        "permittivity table needs at least two (xi, eps) rows");
  }
  for (std::size_t i = 0; i < xi_.size(); ++i) {
    if (!(xi_[i] > 0.0) || !std::isfinite(xi_[i])) {
      throw std::invalid_argument("permittivity table: xi must be positive");
    }
    if (!(eps_[i] > 1.0) || !std::isfinite(eps_[i])) {
      throw std::invalid_argument(
          "permittivity table: eps(i xi) must exceed 1");
    }
    if (i > 0 && !(xi_[i] > xi_[i - 1])) {
      throw std::invalid_argument(
          "permittivity table: xi must be strictly increasing");
    }
    if (i > 0 && eps_[i] > eps_[i - 1]) {
      throw std::invalid_argument(
          "permittivity table: eps(i xi) must be non-increasing");
    }
  }
  log_xi_.reserve(xi_.size());
  log_epsm1_.reserve(xi_.size());
  for (std::size_t i = 0; i < xi_.size(); ++i) {
    log_xi_.push_back(std::log(xi_[i]));
    log_epsm1_.push_back(std::log(eps_[i] - 1.0));
  }
  // high-frequency tail 1 + C/xi^2, C fitted to the last two rows
  const std::size_t n = xi_.size();
  const double c1 = (eps_[n - 2] - 1.0) * xi_[n - 2] * xi_[n - 2];
  const double c2 = (eps_[n - 1] - 1.0) * xi_[n - 1] * xi_[n - 1];
  high_tail_c_ = std::sqrt(c1 * c2);
}

double PermittivityTable::eps_at(double xi) const {
  if (xi < xi_.front()) {
    throw TableRangeExceeded(
        "permittivity table queried below its lowest frequency and no "
        "low-frequency extension is configured");
  }
  if (xi >= xi_.back()) {
    return 1.0 + high_tail_c_ / (xi * xi);
  }
  const auto it = std::upper_bound(xi_.begin(), xi_.end(), xi);
  const std::size_t hi = static_cast<std::size_t>(it - xi_.begin());
  const std::size_t lo = hi - 1;
  const double lx = std::log(xi);
  const double t = (lx - log_xi_[lo]) / (log_xi_[hi] - log_xi_[lo]);
  const double le = log_epsm1_[lo] + t * (log_epsm1_[hi] - log_epsm1_[lo]);
  return 1.0 + std::exp(le);
}

// ---------------------------------------------------------------------------
// dielectric model helpers

namespace {

struct ModelTraits {
  bool perfect = false;
  bool te_zero_included = true;
  std::optional<double> zero_mode_omega_p;  // for the n=0 TE reflection
  const Tabulated* table = nullptr;
  double omega_p = 0.0;
};

ModelTraits traits_of(const DielectricModel& model) {
  ModelTraits t;
  if (std::holds_alternative<PerfectConductor>(model)) {
    t.perfect = true;
  } else if (const auto* p = std::get_if<Plasma>(&model)) {
    t.omega_p = p->omega_p;
    t.zero_mode_omega_p = p->omega_p;
  } else if (const auto* pn = std::get_if<PlasmaNoTEZero>(&model)) {
    t.omega_p = pn->omega_p;
    t.zero_mode_omega_p = pn->omega_p;
    t.te_zero_included = false;
  } else {
    t.table = &std::get<Tabulated>(model);
    t.zero_mode_omega_p = t.table->low_freq_omega_p;
  }
  if (!t.perfect && !t.table && !(t.omega_p > 0.0)) {
    throw std::invalid_argument("plasma frequency must be positive");
  }
  return t;
}

double model_eps(const ModelTraits& t, double xi) {
  if (t.table) {
    if (xi < t.table->table.xi_min()) {
      if (!t.table->low_freq_omega_p) {
        throw TableRangeExceeded(
            "tabulated model needs a low-frequency plasma extension to "
            "cover xi below the table range");
      }
      const double wp = *t.table->low_freq_omega_p;
      return 1.0 + wp * wp / (xi * xi);
    }
    return t.table->table.eps_at(xi);
  }
  return 1.0 + t.omega_p * t.omega_p / (xi * xi);
}

// k-integral of one Matsubara term after the u = 2 q l substitution:
//   g = (1/4l^2) Int_{u_min}^{u_min+span} u [ln(1-rTM^2 e^-u)+ln(1-rTE^2 e^-u)] du
double k_integral(double l, double xi, const ModelTraits& t, bool zero_mode,
                  const Options& opts) {
  const double u_min = 2.0 * xi * l / c;
  const double inv2l = 1.0 / (2.0 * l);

  std::function<double(double)> integrand;
  if (t.perfect) {
    integrand = [](double u) { return 2.0 * u * std::log1p(-std::exp(-u)); };
  } else if (zero_mode) {
    // xi -> 0 limits: r_TM = 1; the TE reflection keeps the plasma
    // wavenumber sqrt(k^2 + omega_p^2/c^2)
    if (!t.zero_mode_omega_p) {
      throw TableRangeExceeded(
          "tabulated model needs a low-frequency plasma extension for the "
          "n=0 Matsubara term");
    }
    const double kappa = *t.zero_mode_omega_p / c;
    const bool te_on = t.te_zero_included;
    integrand = [inv2l, kappa, te_on](double u) {
      const double e = std::exp(-u);
      double v = std::log1p(-e);  // TM, r^2 = 1
      if (te_on) {
        const double q = u * inv2l;
        const double kn = std::sqrt(q * q + kappa * kappa);
        const double rte = (q - kn) / (q + kn);
        v += std::log1p(-rte * rte * e);
      }
      return u * v;
    };
  } else {
    const double eps = model_eps(t, xi);
    const double xi_c2 = (xi / c) * (xi / c);
    integrand = [inv2l, eps, xi_c2](double u) {
      const double q = u * inv2l;
      const double kn = std::sqrt(q * q + (eps - 1.0) * xi_c2);
      const double rtm = (eps * q - kn) / (eps * q + kn);
      const double rte = (q - kn) / (q + kn);
      const double e = std::exp(-u);
      return u * (std::log1p(-rtm * rtm * e) + std::log1p(-rte * rte * e));
    };
  }

  const QuadratureResult r =
      quad::integrate(integrand, u_min, u_min + opts.u_span,
                      quad::Options{opts.k_rel_tol, 0.0, 4000});
  return r.value / (4.0 * l * l);
}

// Matsubara sum with the adaptive truncation rule: stop once
// `consecutive_small` successive terms each fall below term_epsilon of the
// running total.  The Parallel policy evaluates terms in fixed-size blocks
// and reduces them in index order, so its result is bit-identical to Serial.
double matsubara_sum(double l, double T, const ModelTraits& t,
                     const Options& opts) {
  const double xi1 = 2.0 * pi * k_B * T / hbar;
  double total = 0.5 * k_integral(l, 0.0, t, /*zero_mode=*/true, opts);

  constexpr long kBlock = 32;
  int small_run = 0;
  bool done = false;
  std::vector<double> terms(kBlock);

  for (long n0 = 1; n0 <= opts.n_max && !done; n0 += kBlock) {
    const long count = std::min<long>(kBlock, opts.n_max - n0 + 1);
    if (opts.exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
      for (long j = 0; j < count; ++j) {
        terms[static_cast<std::size_t>(j)] =
            k_integral(l, (n0 + j) * xi1, t, false, opts);
      }
      for (long j = 0; j < count; ++j) {
        const double g = terms[static_cast<std::size_t>(j)];
        total += g;
        if (std::abs(g) < opts.term_epsilon * std::abs(total)) {
          if (++small_run >= opts.consecutive_small) {
            done = true;
            break;
          }
        } else {
          small_run = 0;
        }
      }
    } else {
      for (long j = 0; j < count; ++j) {
        const double g = k_integral(l, (n0 + j) * xi1, t, false, opts);
        total += g;
        if (std::abs(g) < opts.term_epsilon * std::abs(total)) {
          if (++small_run >= opts.consecutive_small) {
            done = true;
            break;
          }
        } else {
          small_run = 0;
        }
      }
    }
  }
  if (!done) {
    throw SumNonConvergence(
        "Matsubara sum did not satisfy the truncation rule below the hard "
        "index cap");
  }
  return k_B * T / (2.0 * pi) * total;
}

// T = 0: continuous imaginary frequency, (hbar/2pi) Int dxi in place of the
// thermal sum.  With xi = (c/2l) v this collapses to
//   E = (hbar c / 32 pi^2 l^3) Int_0^inf dv Int_v^{v+span} u [...] du .
double zero_temperature_energy(double l, const ModelTraits& t,
                               const Options& opts) {
  const auto outer = [&](double v) {
    const double xi = 0.5 * c * v / l;
    if (v == 0.0) {
      return 4.0 * l * l * k_integral(l, 0.0, t, /*zero_mode=*/true, opts);
    }
    return 4.0 * l * l * k_integral(l, xi, t, false, opts);
  };
  const QuadratureResult r =
      quad::integrate(outer, 0.0, opts.u_span, quad::Options{1e-9, 0.0, 4000});
  return hbar_c / (32.0 * pi * pi * l * l * l) * r.value;
}

void check_inputs(double l, ThermalState thermal) {
  if (!(l > 0.0)) {
    throw GeometryError(GeometryErrorCode::NonPositiveLength,
                        "plate separation l must be positive");
  }
  if (thermal.T < 0.0 || !std::isfinite(thermal.T)) {
    throw std::invalid_argument("temperature must be non-negative");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// public surface

double free_energy_pp(double l, const DielectricModel& model,
                      ThermalState thermal, const Options& opts) {
  check_inputs(l, thermal);
  const ModelTraits t = traits_of(model);

  if (t.perfect) {
    if (thermal.T == 0.0) return ideal::energy_per_area_pp(l);
    return matsubara_sum(l, thermal.T, t, opts);
  }
  // dispersive models: sub-kelvin temperatures route to the T=0 integral
  if (thermal.T < 1.0) return zero_temperature_energy(l, t, opts);
  return matsubara_sum(l, thermal.T, t, opts);
}

double pressure_pp(double l, const DielectricModel& model, ThermalState thermal,
                   const Options& opts) {
  check_inputs(l, thermal);
  const double h = opts.stencil_rel_step * l;
  const auto f = [&](double x) { return free_energy_pp(x, model, thermal, opts); };
  const double deriv =
      (f(l - 2 * h) - 8 * f(l - h) + 8 * f(l + h) - f(l + 2 * h)) / (12 * h);
  return -deriv;
}

double second_derivative_energy_pp(double l, const DielectricModel& model,
                                   ThermalState thermal, const Options& opts) {
  check_inputs(l, thermal);
  const double h = opts.stencil_rel_step * l;
  const auto f = [&](double x) { return free_energy_pp(x, model, thermal, opts); };
  return (-f(l - 2 * h) + 16 * f(l - h) - 30 * f(l) + 16 * f(l + h) -
          f(l + 2 * h)) /
         (12 * h * h);
}

PlatePlateEnergyProfile make_profile(const DielectricModel& model,
                                     ThermalState thermal,
                                     const Options& opts) {
  std::ostringstream label;
  label << model_label(model) << " T=" << thermal.T << "K";
  return PlatePlateEnergyProfile{
      [model, thermal, opts](double l) {
        return free_energy_pp(l, model, thermal, opts);
      },
      label.str(),
  };
}

std::string model_label(const DielectricModel& model) {
  std::ostringstream os;
  if (std::holds_alternative<PerfectConductor>(model)) {
    os << "perfect-conductor";
  } else if (const auto* p = std::get_if<Plasma>(&model)) {
    os << "plasma(omega_p=" << p->omega_p << " rad/s)";
  } else if (const auto* pn = std::get_if<PlasmaNoTEZero>(&model)) {
    os << "plasma-no-te0(omega_p=" << pn->omega_p << " rad/s)";
  } else {
    const auto& tab = std::get<Tabulated>(model);
    os << "tabulated(" << tab.table.size() << " rows, xi in ["
       << tab.table.xi_min() << ", " << tab.table.xi_max() << "] rad/s)";
  }
  return os.str();
}

double gold_plasma_frequency() { return constants::ev_to_rad_per_s(9.0); }

}  // namespace casimir::lifshitz
