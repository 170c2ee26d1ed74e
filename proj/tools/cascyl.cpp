// cascyl: Casimir and electrostatic forces for eccentric cylinders and the
// companion plate / sphere-plane / cylinder-plane geometries.
//
// Subcommands: force, curve, plan, electrostatic, ingest-permittivity.
// Lengths, areas and voltages must carry unit suffixes (um, mm, m, mm2, mV,
// ...).  Output is deterministic: fixed float formatting (ten significant
// digits), fixed key order, no timestamps; repeated runs are byte-identical
// and independent of --threads.
//
// Exit codes: 0 success, 1 numerical failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "casimir/constants.hpp"
#include "casimir/corrections.hpp"
#include "casimir/electrostatics.hpp"
#include "casimir/errors.hpp"
#include "casimir/geometry.hpp"
#include "casimir/ideal_forces.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/pfa_engine.hpp"
#include "casimir/planner.hpp"
#include "casimir/threading.hpp"
#include "casimir/units.hpp"

namespace {

using namespace casimir;

constexpr const char* kVersion = "0.1.0";
constexpr const char* kSignConvention =
    "eccentric-cylinder forces are positive along increasing axis offset "
    "(destabilizing); plate-normal forces are negative (attractive)";

// ---------------------------------------------------------------------------
// tiny deterministic JSON emitter (fixed order, %.9e floats)

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

class JsonObject {
 public:
  void add_number(const std::string& key, double v) {
    fields_.emplace_back(key, units::format_si(v));
  }
  void add_int(const std::string& key, long v) {
    fields_.emplace_back(key, std::to_string(v));
  }
  void add_string(const std::string& key, const std::string& v) {
    fields_.emplace_back(key, "\"" + json_escape(v) + "\"");
  }
  void add_raw(const std::string& key, const std::string& rendered) {
    fields_.emplace_back(key, rendered);
  }
  void add_string_array(const std::string& key,
                        const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ", ";
      out += "\"" + json_escape(items[i]) + "\"";
    }
    out += "]";
    fields_.emplace_back(key, out);
  }

  std::string render(int indent = 0) const {
    const std::string pad(indent + 2, ' ');
    std::string out = "{\n";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      out += pad + "\"" + fields_[i].first + "\": " + fields_[i].second;
      if (i + 1 < fields_.size()) out += ",";
      out += "\n";
    }
    out += std::string(indent, ' ') + "}";
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string render_run(const JsonObject& inputs, const JsonObject& outputs,
                       const JsonObject& metadata) {
  JsonObject root;
  root.add_raw("inputs", inputs.render(2));
  root.add_raw("outputs", outputs.render(2));
  root.add_raw("metadata", metadata.render(2));
  return root.render(0) + "\n";
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("--output: cannot open '" + path + "'");
  out << text;
}

// ---------------------------------------------------------------------------
// shared flag bundles

struct ModelFlags {
  std::string model = "ideal";
  double T = 0.0;
  double omega_p_ev = 9.0;
  double omega_p_rad_s = 0.0;
  std::string table_path;
  double low_freq_omega_p_ev = 0.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--model", model, "ideal|plasma|plasma-no-te0|tabulated")
        ->check(CLI::IsMember({"ideal", "plasma", "plasma-no-te0", "tabulated"}));
    cmd->add_option("--T", T, "temperature [K] (default 0)");
    cmd->add_option("--omega-p-ev", omega_p_ev,
                    "plasma frequency [eV] (default 9.0, gold)");
    cmd->add_option("--omega-p-rad-s", omega_p_rad_s,
                    "plasma frequency [rad/s] (overrides --omega-p-ev)");
    cmd->add_option("--table", table_path,
                    "permittivity table CSV for --model tabulated");
    cmd->add_option("--low-freq-omega-p-ev", low_freq_omega_p_ev,
                    "low-frequency plasma extension for tabulated tables [eV]");
  }

  double omega_p() const {
    return omega_p_rad_s > 0.0 ? omega_p_rad_s
                               : constants::ev_to_rad_per_s(omega_p_ev);
  }

  lifshitz::DielectricModel build() const;
  lifshitz::ThermalState thermal() const { return lifshitz::ThermalState{T}; }
};

lifshitz::PermittivityTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("--table: cannot open '" + path + "'");
  std::vector<double> xi, eps;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    double x = 0.0, e = 0.0;
    char comma = 0;
    std::istringstream row(line);
    if (!(row >> x >> comma >> e) || comma != ',') {
      throw NumericalError("permittivity table " + path + ": line " +
                           std::to_string(lineno) +
                           " is not 'xi_rad_per_s,eps_at_i_xi'");
    }
    xi.push_back(x);
    eps.push_back(e);
  }
  try {
    return lifshitz::PermittivityTable(std::move(xi), std::move(eps));
  } catch (const std::invalid_argument& e) {
    throw NumericalError(std::string("permittivity table ") + path + ": " +
                         e.what());
  }
}

lifshitz::DielectricModel ModelFlags::build() const {
  if (model == "ideal") return lifshitz::PerfectConductor{};
  if (model == "plasma") return lifshitz::Plasma{omega_p()};
  if (model == "plasma-no-te0") return lifshitz::PlasmaNoTEZero{omega_p()};
  if (table_path.empty()) {
    throw std::invalid_argument("--model tabulated requires --table FILE");
  }
  std::optional<double> low;
  if (low_freq_omega_p_ev > 0.0) {
    low = constants::ev_to_rad_per_s(low_freq_omega_p_ev);
  }
  return lifshitz::Tabulated{load_table(table_path), low};
}

struct GeometryFlags {
  std::string kind;
  std::string a, b, L, eps, d, A, R;

  void attach(CLI::App* cmd, bool require_kind) {
    auto* opt = cmd->add_option("--geometry", kind, "pp|sp|cp|ecc");
    opt->check(CLI::IsMember({"pp", "sp", "cp", "ecc"}));
    if (require_kind) opt->required();
    cmd->add_option("--a", a, "inner/cylinder radius, unit-suffixed (e.g. 100um)");
    cmd->add_option("--b", b, "outer radius (ecc), unit-suffixed");
    cmd->add_option("--L", L, "cylinder length, unit-suffixed");
    cmd->add_option("--eps", eps, "axis offset (ecc), unit-suffixed");
    cmd->add_option("--d", d, "separation, unit-suffixed");
    cmd->add_option("--A", A, "plate area (pp), unit-suffixed (e.g. 1mm2)");
    cmd->add_option("--R", R, "sphere radius (sp), unit-suffixed");
  }

  static double need(const std::string& text, const char* flag) {
    if (text.empty()) {
      throw std::invalid_argument(std::string(flag) +
                                  " is required for this geometry");
    }
    return units::parse_length(text, flag);
  }

  EccentricCylinders eccentric() const {
    return EccentricCylinders{need(a, "--a"), need(b, "--b"), need(L, "--L"),
                              eps.empty() ? 0.0 : units::parse_length(eps, "--eps")};
  }
  ParallelPlates plates() const {
    if (A.empty()) throw std::invalid_argument("--A is required for --geometry pp");
    return ParallelPlates{units::parse_area(A, "--A"), need(d, "--d")};
  }
  SpherePlane sphere() const {
    if (R.empty()) throw std::invalid_argument("--R is required for --geometry sp");
    return SpherePlane{units::parse_length(R, "--R"), need(d, "--d")};
  }
  CylinderPlane cylinder() const {
    return CylinderPlane{need(a, "--a"), need(L, "--L"), need(d, "--d")};
  }
};

// ---------------------------------------------------------------------------
// force

int run_force(const GeometryFlags& geo, const ModelFlags& mod,
              const std::string& method, double tol,
              const std::string& format, const std::string& output) {
  const bool ideal_model = (mod.model == "ideal" && mod.T == 0.0);
  JsonObject inputs, outputs, metadata;
  inputs.add_string("subcommand", "force");
  inputs.add_string("geometry", geo.kind);
  inputs.add_string("model", mod.model);
  inputs.add_number("T_K", mod.T);
  std::string formula;
  std::vector<std::string> warnings;

  const pfa::Options pfa_opts{tol, 20000};
  const lifshitz::Options lif_opts;

  double force = 0.0;
  std::optional<QuadratureResult> qr;

  if (geo.kind == "ecc") {
    const EccentricCylinders g = geo.eccentric();
    inputs.add_number("a_m", g.a);
    inputs.add_number("b_m", g.b);
    inputs.add_number("L_m", g.L);
    inputs.add_number("eps_m", g.eps);
    ensure_valid(Geometry{g});
    outputs.add_number("f0_magnitude_N", ideal::f0_magnitude(g));
    if (ideal_model) {
      ideal::IdealForceResult res{};
      if (method == "auto" || method == "closed") {
        res = ideal::force_eccentric_closed_form(g);
        formula = "eccentric-closed-form";
      } else if (method == "small") {
        res = ideal::force_eccentric_small(g);
        formula = "eccentric-small-offset";
      } else if (method == "large") {
        res = ideal::force_eccentric_large(g);
        formula = "eccentric-large-offset-asymptote";
      } else if (method == "integral") {
        res.force = pfa::force_integral_leading_order(g, pfa_opts);
        res.warnings = validate_geometry(Geometry{g}).warnings;
        formula = "eccentric-leading-order-integral";
      } else if (method == "quadrature") {
        qr = pfa::force_from_energy(g, ideal_profile(), pfa_opts);
        res.force = qr->value;
        res.warnings = validate_geometry(Geometry{g}).warnings;
        formula = "pfa-energy-quadrature";
      } else {
        throw std::invalid_argument("--method: '" + method +
                                    "' is not valid for --geometry ecc");
      }
      force = res.force;
      warnings = res.warnings;
    } else {
      const auto model = mod.build();
      warnings = validate_geometry(Geometry{g}).warnings;
      if (method == "auto" || method == "curvature") {
        force = corrections::corrected_force_eccentric(g, model, mod.thermal(),
                                                       lif_opts);
        formula = "small-offset-curvature";
        if (g.eps_tilde() > 0.2) {
          warnings.push_back("eps_tilde > 0.2: the small-offset curvature "
                             "formula degrades; consider --method quadrature");
        }
      } else if (method == "quadrature") {
        qr = pfa::force_from_energy(
            g, lifshitz::make_profile(model, mod.thermal(), lif_opts), pfa_opts);
        force = qr->value;
        formula = "pfa-energy-quadrature";
      } else {
        throw std::invalid_argument("--method: '" + method +
                                    "' is not valid for corrected models");
      }
    }
  } else if (geo.kind == "pp") {
    const ParallelPlates g = geo.plates();
    inputs.add_number("A_m2", g.A);
    inputs.add_number("d_m", g.d);
    ensure_valid(Geometry{g});
    if (ideal_model) {
      force = ideal::force_pp(g);
      formula = "parallel-plates-analytic";
    } else {
      force = lifshitz::pressure_pp(g.d, mod.build(), mod.thermal(), lif_opts) * g.A;
      formula = "lifshitz-pressure-times-area";
    }
    warnings = validate_geometry(Geometry{g}).warnings;
  } else if (geo.kind == "sp") {
    const SpherePlane g = geo.sphere();
    inputs.add_number("R_m", g.R);
    inputs.add_number("d_m", g.d);
    ensure_valid(Geometry{g});
    if (ideal_model) {
      force = ideal::force_sphere_plane(g);
      formula = "sphere-plane-pfa-analytic";
    } else {
      force = 2.0 * constants::pi * g.R *
              lifshitz::free_energy_pp(g.d, mod.build(), mod.thermal(), lif_opts);
      formula = "sphere-plane-pfa-energy";
    }
    warnings = validate_geometry(Geometry{g}).warnings;
  } else {  // cp
    const CylinderPlane g = geo.cylinder();
    inputs.add_number("a_m", g.a);
    inputs.add_number("L_m", g.L);
    inputs.add_number("d_m", g.d);
    ensure_valid(Geometry{g});
    if (ideal_model) {
      if (method == "integral") {
        force = ideal::force_cylinder_plane(g, ideal::CylinderPlaneForm::Integral);
        formula = "cylinder-plane-integral";
      } else if (method == "auto" || method == "asymptotic") {
        force = ideal::force_cylinder_plane(g);
        formula = "cylinder-plane-asymptote";
      } else {
        throw std::invalid_argument("--method: '" + method +
                                    "' is not valid for --geometry cp");
      }
    } else {
      qr = pfa::cylinder_plane_pfa(
          g, lifshitz::make_profile(mod.build(), mod.thermal(), lif_opts),
          pfa::StripAreaMode::PlainSurface, pfa_opts);
      force = qr->value;
      formula = "cylinder-plane-pfa-quadrature";
    }
    warnings = validate_geometry(Geometry{g}).warnings;
  }

  inputs.add_string("method", method);
  outputs.add_number("force_N", force);
  if (qr) {
    outputs.add_number("quadrature_abs_error_N", qr->abs_error);
    outputs.add_int("quadrature_evaluations", static_cast<long>(qr->evaluations));
  }
  metadata.add_string("version", kVersion);
  metadata.add_string("formula", formula);
  metadata.add_string("sign_convention", kSignConvention);
  metadata.add_string_array("warnings", warnings);

  if (format == "csv") {
    write_output(output, "force_N\n" + units::format_si(force) + "\n");
  } else {
    write_output(output, render_run(inputs, outputs, metadata));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// curve

int run_curve(const std::string& kind, bool all_geometries,
              const ModelFlags& mod, const std::string& d_min,
              const std::string& d_max, int points, const std::string& spacing,
              const corrections::CurveParams& params,
              const std::string& output) {
  if (points < 2) throw std::invalid_argument("--points must be >= 2");
  const double lo = units::parse_length(d_min, "--d-min");
  const double hi = units::parse_length(d_max, "--d-max");
  if (!(lo > 0.0) || !(hi > lo)) {
    throw std::invalid_argument("--d-min/--d-max: need 0 < d-min < d-max");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    grid[static_cast<std::size_t>(i)] =
        spacing == "log" ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
  }

  std::vector<corrections::GeometryKind> kinds;
  if (all_geometries) {
    kinds = {corrections::GeometryKind::SpherePlane,
             corrections::GeometryKind::CylinderPlane,
             corrections::GeometryKind::ParallelPlates,
             corrections::GeometryKind::EccentricCylinders};
  } else {
    if (kind.empty()) {
      throw std::invalid_argument("curve needs --geometry or --all-geometries");
    }
    if (kind == "pp") kinds = {corrections::GeometryKind::ParallelPlates};
    else if (kind == "sp") kinds = {corrections::GeometryKind::SpherePlane};
    else if (kind == "cp") kinds = {corrections::GeometryKind::CylinderPlane};
    else kinds = {corrections::GeometryKind::EccentricCylinders};
  }

  const auto model = mod.build();
  std::ostringstream csv;
  csv << "# cascyl " << kVersion << " curve\n";
  csv << "# model: " << lifshitz::model_label(model) << ", T=" << mod.T << " K\n";
  if (all_geometries) csv << "geometry,";
  csv << "d_m,F_ideal_N,F_corrected_N,ratio\n";
  for (const auto kind : kinds) {
    const auto c = corrections::correction_curve(kind, params, model,
                                                 mod.thermal(), grid);
    for (const auto& row : c.rows) {
      if (all_geometries) csv << corrections::to_string(kind) << ",";
      csv << units::format_si(row.d) << "," << units::format_si(row.F_ideal)
          << "," << units::format_si(row.F_corrected) << ","
          << units::format_si(row.ratio) << "\n";
    }
  }
  write_output(output, csv.str());
  return 0;
}

// ---------------------------------------------------------------------------
// plan / electrostatic

void add_electrostatic_outputs(const EccentricCylinders& g,
                               const std::string& V_text,
                               const std::string& method, JsonObject& inputs,
                               JsonObject& outputs,
                               std::vector<std::string>& warnings) {
  if (V_text.empty()) {
    throw std::invalid_argument("--V is required for electrostatic output");
  }
  const double V = units::parse_voltage(V_text, "--V");
  const electrostatics::ElectrostaticConfig cfg{g, V};
  inputs.add_number("V_volts", V);
  if (method == "closed" || method == "all") {
    outputs.add_number("electrostatic_force_closed_N",
                       electrostatics::force_closed_form(cfg));
    if (g.eps_tilde() >= 0.2) {
      warnings.push_back("eps_tilde >= 0.2: the linear electrostatic closed "
                         "form degrades as (3/2) eps_tilde^2");
    }
  }
  if (method == "leading" || method == "all") {
    outputs.add_number("electrostatic_force_leading_N",
                       electrostatics::force_leading_order(cfg));
  }
  if (method == "quadrature" || method == "all") {
    const auto q = electrostatics::force_quadrature(cfg);
    outputs.add_number("electrostatic_force_quadrature_N", q.value);
    outputs.add_number("electrostatic_force_abs_error_N", q.abs_error);
  }
}

int run_plan(const GeometryFlags& geo, const ModelFlags& mod, double M,
             double omega0, bool electrostatic, const std::string& V_text,
             const std::string& es_method, const std::string& output) {
  const EccentricCylinders g = geo.eccentric();
  ensure_valid(Geometry{g});
  JsonObject inputs, outputs, metadata;
  inputs.add_string("subcommand", "plan");
  inputs.add_number("a_m", g.a);
  inputs.add_number("b_m", g.b);
  inputs.add_number("L_m", g.L);
  inputs.add_number("eps_m", g.eps);
  inputs.add_string("model", mod.model);
  inputs.add_number("T_K", mod.T);
  inputs.add_number("M_kg", M);
  inputs.add_number("omega0_rad_s", omega0);

  std::vector<std::string> warnings = validate_geometry(Geometry{g}).warnings;
  const auto shift = planner::frequency_shift(
      g, planner::ResonatorSpec{M, omega0}, mod.build(), mod.thermal());
  outputs.add_number("delta_omega_over_omega0", shift.shift);
  outputs.add_number("spring_constant_N_per_m", shift.spring_constant);
  for (const auto& note : shift.notes) warnings.push_back(note);

  if (electrostatic) {
    add_electrostatic_outputs(g, V_text, es_method, inputs, outputs, warnings);
  }

  metadata.add_string("version", kVersion);
  metadata.add_string("formula", "resonator-frequency-shift");
  metadata.add_string("sign_convention", kSignConvention);
  metadata.add_string_array("warnings", warnings);
  write_output(output, render_run(inputs, outputs, metadata));
  return 0;
}

int run_electrostatic(const GeometryFlags& geo, const std::string& V_text,
                      const std::string& es_method, const std::string& output) {
  const EccentricCylinders g = geo.eccentric();
  ensure_valid(Geometry{g});
  JsonObject inputs, outputs, metadata;
  inputs.add_string("subcommand", "electrostatic");
  inputs.add_number("a_m", g.a);
  inputs.add_number("b_m", g.b);
  inputs.add_number("L_m", g.L);
  inputs.add_number("eps_m", g.eps);
  std::vector<std::string> warnings = validate_geometry(Geometry{g}).warnings;
  add_electrostatic_outputs(g, V_text, es_method, inputs, outputs, warnings);
  metadata.add_string("version", kVersion);
  metadata.add_string("formula", "electrostatic-pfa");
  metadata.add_string("sign_convention", kSignConvention);
  metadata.add_string_array("warnings", warnings);
  write_output(output, render_run(inputs, outputs, metadata));
  return 0;
}

// ---------------------------------------------------------------------------
// ingest-permittivity

int run_ingest(const std::string& path, double low_freq_ev) {
  const lifshitz::PermittivityTable table = load_table(path);
  JsonObject report;
  report.add_string("file", path);
  report.add_int("rows", static_cast<long>(table.size()));
  report.add_number("xi_min_rad_s", table.xi_min());
  report.add_number("xi_max_rad_s", table.xi_max());
  report.add_number("eps_at_xi_min", table.eps().front());
  report.add_number("eps_at_xi_max", table.eps().back());
  report.add_string("xi_strictly_increasing", "true");
  report.add_string("eps_non_increasing", "true");
  report.add_string("low_frequency_extension",
                    low_freq_ev > 0.0 ? "plasma" : "none (n=0 term unavailable)");
  std::fputs((report.render(0) + "\n").c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir and electrostatic forces between conductors, with "
               "emphasis on slightly eccentric coaxial cylinders"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "worker threads for parallel kernels");

  auto* force = app.add_subcommand("force", "single-point force");
  GeometryFlags force_geo;
  ModelFlags force_mod;
  force_geo.attach(force, /*require_kind=*/true);
  force_mod.attach(force);
  std::string force_method = "auto";
  double force_tol = 1e-9;
  std::string force_format = "json", force_output;
  force->add_option("--method", force_method,
                    "auto|closed|small|large|integral|quadrature|asymptotic|curvature");
  force->add_option("--tol", force_tol, "quadrature relative tolerance");
  force->add_option("--format", force_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  force->add_option("--output", force_output, "output path (default stdout)");

  auto* curve = app.add_subcommand("curve", "correction curves over a distance grid");
  ModelFlags curve_mod;
  curve_mod.attach(curve);
  bool all_geometries = false;
  std::string curve_kind;
  std::string d_min, d_max, spacing = "linear", curve_output;
  int points = 25;
  std::string p_A = "1mm2", p_R = "100um", p_a = "100um", p_L = "5mm";
  double p_eps_tilde = 0.1;
  curve->add_option("--geometry", curve_kind, "pp|sp|cp|ecc")
      ->check(CLI::IsMember({"pp", "sp", "cp", "ecc"}));
  curve->add_flag("--all-geometries", all_geometries,
                  "emit all four geometries with a geometry column");
  curve->add_option("--d-min", d_min, "grid start, unit-suffixed")->required();
  curve->add_option("--d-max", d_max, "grid end, unit-suffixed")->required();
  curve->add_option("--points", points, "grid size (default 25)");
  curve->add_option("--spacing", spacing, "linear|log")
      ->check(CLI::IsMember({"linear", "log"}));
  curve->add_option("--A", p_A, "plate area (default 1mm2)");
  curve->add_option("--R", p_R, "sphere radius (default 100um)");
  curve->add_option("--a", p_a, "cylinder/inner radius (default 100um)");
  curve->add_option("--L", p_L, "cylinder length (default 5mm)");
  curve->add_option("--eps-tilde", p_eps_tilde,
                    "eccentric offset fraction (default 0.1; ratio-invariant)");
  curve->add_option("--output", curve_output, "output path (default stdout)");

  auto* plan = app.add_subcommand("plan", "experiment planning calculators");
  GeometryFlags plan_geo;
  ModelFlags plan_mod;
  plan_geo.attach(plan, /*require_kind=*/false);
  plan_mod.attach(plan);
  double M = 0.0, omega0 = 0.0;
  bool plan_es = false;
  std::string plan_V, plan_es_method = "all", plan_output;
  plan->add_option("--M", M, "resonator effective mass [kg]")->required();
  plan->add_option("--omega0", omega0, "resonator frequency [rad/s]")->required();
  plan->add_flag("--electrostatic", plan_es, "also report the residual-charge force");
  plan->add_option("--V", plan_V, "potential difference, unit-suffixed (e.g. 10mV)");
  plan->add_option("--es-method", plan_es_method, "closed|leading|quadrature|all");
  plan->add_option("--output", plan_output, "output path (default stdout)");

  auto* es = app.add_subcommand("electrostatic",
                                "residual-charge force between the cylinders");
  GeometryFlags es_geo;
  std::string es_V, es_method = "all", es_output;
  es_geo.attach(es, /*require_kind=*/false);
  es->add_option("--V", es_V, "potential difference, unit-suffixed")->required();
  es->add_option("--es-method", es_method, "closed|leading|quadrature|all");
  es->add_option("--output", es_output, "output path (default stdout)");

  auto* ingest = app.add_subcommand("ingest-permittivity",
                                    "validate a permittivity table CSV");
  std::string ingest_path;
  double ingest_low_ev = 0.0;
  ingest->add_option("file", ingest_path, "two-column CSV: xi_rad_per_s,eps_at_i_xi")
      ->required();
  ingest->add_option("--low-freq-omega-p-ev", ingest_low_ev,
                     "intended low-frequency plasma extension [eV]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (threads > 0) set_num_threads(threads);

  try {
    if (force->parsed()) {
      return run_force(force_geo, force_mod, force_method, force_tol,
                       force_format, force_output);
    }
    if (curve->parsed()) {
      corrections::CurveParams params;
      params.A = units::parse_area(p_A, "--A");
      params.R = units::parse_length(p_R, "--R");
      params.a = units::parse_length(p_a, "--a");
      params.L = units::parse_length(p_L, "--L");
      params.eps_tilde = p_eps_tilde;
      return run_curve(curve_kind, all_geometries, curve_mod, d_min, d_max,
                       points, spacing, params, curve_output);
    }
    if (plan->parsed()) {
      return run_plan(plan_geo, plan_mod, M, omega0, plan_es, plan_V,
                      plan_es_method, plan_output);
    }
    if (es->parsed()) {
      return run_electrostatic(es_geo, es_V, es_method, es_output);
    }
    if (ingest->parsed()) {
      return run_ingest(ingest_path, ingest_low_ev);
    }
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
