#include "sono/report.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "sono/units.hpp"

namespace sono::cli {

namespace {

const char* source_of(const RunConfig& cfg, const std::string& key) {
  const auto it = cfg.sources.find(key);
  return it == cfg.sources.end() ? "default" : it->second.c_str();
}

OrderedJson param(const RunConfig& cfg, const std::string& key, double value,
                  const char* unit) {
  return quantity(value, unit, source_of(cfg, key));
}

OrderedJson parameters_json(const RunConfig& cfg) {
  OrderedJson p;
  p["bubble"] = {
      {"R0", param(cfg, "bubble.R0_um", cfg.bubble.R0_um, "um")},
      {"rho0", param(cfg, "bubble.rho0_per_cm3", cfg.bubble.rho0_per_cm3,
                     "1/cm^3")},
      {"a_liquid", param(cfg, "bubble.a_liquid_angstrom",
                         cfg.bubble.a_liquid_angstrom, "angstrom")},
      {"ambient_pressure", param(cfg, "bubble.ambient_pressure_atm",
                                 cfg.bubble.ambient_pressure_atm, "atm")},
      {"vapour_temperature", param(cfg, "bubble.vapour_temperature_k",
                                   cfg.bubble.vapour_temperature_k, "K")},
  };
  p["coherence"] = {
      {"omega0",
       param(cfg, "coherence.omega0_ev", cfg.coherence.omega0_ev, "eV")},
      {"g_squared", param(cfg, "coherence.g_squared", cfg.coherence.g_squared,
                          "dimensionless")},
      {"rho_critical", param(cfg, "coherence.rho_critical_per_cm3",
                             cfg.coherence.rho_critical_per_cm3, "1/cm^3")},
  };
  p["spectrum"] = {
      {"omega0",
       param(cfg, "spectrum.omega0_ev", cfg.spectrum.omega0_ev, "eV")},
      {"omega_rabi", param(cfg, "spectrum.omega_rabi_ev",
                           cfg.spectrum.omega_rabi_ev, "eV")},
      {"gamma", param(cfg, "spectrum.gamma_ev", cfg.spectrum.gamma_ev, "eV")},
      {"c1_squared", param(cfg, "spectrum.c1_squared",
                           cfg.spectrum.c1_squared, "dimensionless")},
      {"form_factor_coeff",
       param(cfg, "spectrum.form_factor_coeff",
             cfg.spectrum.form_factor_coeff, "dimensionless")},
      {"delta_e",
       param(cfg, "spectrum.delta_e_ev", cfg.spectrum.delta_e_ev, "eV")},
      {"opacity_cutoff", param(cfg, "spectrum.opacity_cutoff_ev",
                               cfg.spectrum.opacity_cutoff_ev, "eV")},
  };
  p["flash"] = {
      {"fluctuation_scale", param(cfg, "flash.fluctuation_scale_cm",
                                  cfg.flash.fluctuation_scale_cm, "cm")},
      {"interface_speed", param(cfg, "flash.interface_speed_cm_per_s",
                                cfg.flash.interface_speed_cm_per_s, "cm/s")},
  };
  return p;
}

OrderedJson constants_json() {
  OrderedJson c;
  c["hbar_c"] = quantity(units::kHbarCEvNm, "eV nm", "fixed");
  c["hbar"] = quantity(units::kHbarEvS, "eV s", "fixed");
  c["ev_to_joule"] = quantity(units::kEvToJoule, "J/eV", "fixed");
  c["mu_critical"] = quantity(-0.5, "dimensionless", "fixed");
  c["liquid_density"] =
      quantity(spectrum::kLiquidDensityPerCm3, "1/cm^3", "fixed");
  c["reference_cd_count"] =
      quantity(flash::kReferenceCdCount, "count", "reference");
  return c;
}

struct GeometryRows {
  std::vector<std::array<std::string, 3>> rows;  // key, value, unit
};

GeometryRows geometry_rows(const RunConfig& cfg) {
  const geometry::CollapseState s = geometry::collapse_state(cfg.bubble);
  GeometryRows out;
  const auto add = [&out](const char* key, double v, const char* unit) {
    out.rows.push_back({key, format_number(v), unit});
  };
  add("a0", s.a0_cm, "cm");
  add("R_star", s.r_star_cm / geometry::kCmPerUm, "um");
  add("a_T_star", s.a_t_star_cm / geometry::kCmPerAngstrom, "angstrom");
  add("rho_star", s.rho_star_per_cm3, "1/cm^3");
  add("shell_thickness", s.shell_thickness_cm, "cm");
  add("R_star_over_thickness", s.r_star_cm / s.shell_thickness_cm,
      "dimensionless");
  add("N_molecules", s.n_molecules, "count");
  add("N_shell", s.n_shell, "count");
  add("shell_fraction", s.n_shell / s.n_molecules, "dimensionless");
  return out;
}

OrderedJson geometry_section(const RunConfig& cfg) {
  const geometry::CollapseState s = geometry::collapse_state(cfg.bubble);
  OrderedJson g;
  g["a0"] = quantity(s.a0_cm, "cm");
  g["R_star"] = quantity(s.r_star_cm / geometry::kCmPerUm, "um");
  g["a_T_star"] =
      quantity(s.a_t_star_cm / geometry::kCmPerAngstrom, "angstrom");
  g["rho_star"] = quantity(s.rho_star_per_cm3, "1/cm^3");
  g["shell_thickness"] = quantity(s.shell_thickness_cm, "cm");
  g["R_star_over_thickness"] =
      quantity(s.r_star_cm / s.shell_thickness_cm, "dimensionless");
  g["N_molecules"] = quantity(s.n_molecules, "count");
  g["N_shell"] = quantity(s.n_shell, "count");
  g["shell_fraction"] = quantity(s.n_shell / s.n_molecules, "dimensionless");
  return g;
}

OrderedJson stability_section(const RunConfig& cfg,
                              const geometry::CollapseState& state) {
  const auto& cp = cfg.coherence;
  const double mu_onset =
      coherence::mu_of_density(cfg.bubble.rho0_per_cm3, cp);
  const double mu_cond =
      coherence::mu_of_density(state.rho_star_per_cm3, cp);

  coherence::CoherenceParams at_cond = cp;
  at_cond.mu = mu_cond;
  const coherence::StabilityReport report =
      coherence::characteristic_roots(at_cond);

  OrderedJson roots = OrderedJson::array();
  for (const auto& r : report.roots)
    roots.push_back({{"re", round_sig9(r.real())},
                     {"im", round_sig9(r.imag())}});

  OrderedJson s;
  s["mu_at_onset"] = quantity(mu_onset, "dimensionless");
  s["mu_at_condensation"] = quantity(mu_cond, "dimensionless");
  s["max_growth_rate_at_condensation"] =
      quantity(report.max_growth_rate, "1/tau");
  s["is_runaway_at_condensation"] = report.is_runaway;
  s["roots_at_condensation"] = roots;
  try {
    s["critical_mu"] = quantity(
        coherence::critical_mu(cp.g_squared, -1.0, 0.0), "dimensionless");
  } catch (const coherence::BracketingError&) {
    s["critical_mu"] = OrderedJson(nullptr);
  }
  s["transition_time"] = quantity(coherence::transition_time_s(cp), "s");
  return s;
}

OrderedJson spectrum_summary(const RunConfig& cfg) {
  const auto& sp = cfg.spectrum;
  const spectrum::Calibration cal = spectrum::calibrate_normalization(sp);
  const std::vector<double> grid = make_grid(cfg.resolved_grid());

  // Peak location comes from an omega-domain scan even when the output grid
  // is in wavelength.
  std::vector<double> omega_grid = grid;
  if (cfg.resolved_grid().domain == GridDomain::lambda) {
    GridSpec omega_default;
    omega_default.domain = GridDomain::omega;
    RunConfig tmp = cfg;
    tmp.output.grid = omega_default;
    omega_grid = make_grid(tmp.resolved_grid());
  }
  const spectrum::SpectrumTable table =
      spectrum::per_molecule_spectrum(omega_grid, sp);

  OrderedJson s;
  s["normalization_K"] = quantity(cal.normalization_k, "dimensionless");
  s["shape_integral"] = quantity(cal.shape_integral_ev, "eV");
  s["omega_max"] = quantity(cal.omega_max_ev, "eV");
  s["literal_prefactor"] = quantity(spectrum::literal_prefactor_ev3(sp),
                                    "eV^3");
  s["literal_prefactor_per_molecule"] =
      quantity(spectrum::literal_prefactor_per_molecule(sp), "dimensionless");
  s["total_energy"] = quantity(table.total_energy_ev, "eV");
  s["detected_energy"] = quantity(table.detected_energy_ev, "eV");
  s["detected_fraction"] =
      quantity(table.detected_energy_ev / table.total_energy_ev,
               "dimensionless");
  s["peak_omega"] = quantity(table.peak_omega_ev, "eV");
  s["opacity_cutoff"] = quantity(sp.opacity_cutoff_ev, "eV");
  return s;
}

OrderedJson flash_section(const RunConfig& cfg,
                          const geometry::CollapseState& state) {
  const double omega0 = cfg.coherence.omega0_ev;
  const double cd_radius = flash::cd_radius_cm(omega0);
  const spectrum::FlashEnergyBudget budget =
      spectrum::flash_energy_budget(state.n_shell, cfg.spectrum);

  OrderedJson f;
  f["cd_radius"] =
      quantity(cd_radius / geometry::kCmPerAngstrom, "angstrom");
  f["cd_radius_cm"] = quantity(cd_radius, "cm");
  f["flash_width"] = quantity(flash::flash_width_ps(cfg.flash), "ps");
  f["cd_count_in_shell"] =
      quantity(flash::cd_count_in_shell(state, omega0), "count");
  f["cd_count_reference"] =
      quantity(flash::kReferenceCdCount, "count", "reference");
  f["budget_total"] = quantity(budget.total_ev, "eV");
  f["budget_total_joule"] = quantity(budget.total_joule, "J");
  f["budget_detected"] = quantity(budget.detected_ev, "eV");
  f["budget_detected_joule"] = quantity(budget.detected_joule, "J");
  return f;
}

template <typename Fn>
auto staged(const char* stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::domain_error& e) {
    throw std::domain_error(std::string(stage) + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(std::string(stage) + ": " + e.what());
  }
}

}  // namespace

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

double round_sig9(double value) {
  return std::strtod(format_number(value).c_str(), nullptr);
}

OrderedJson quantity(double value, const char* unit) {
  return OrderedJson{{"value", round_sig9(value)}, {"unit", unit}};
}

OrderedJson quantity(double value, const char* unit,
                     const std::string& source) {
  return OrderedJson{
      {"value", round_sig9(value)}, {"unit", unit}, {"source", source}};
}

std::vector<double> make_grid(const GridSpec& grid) {
  if (!(grid.step > 0.0) || !(grid.min < grid.max))
    throw std::domain_error("grid: need step > 0 and min < max");
  const long n =
      std::lround(std::floor((grid.max - grid.min) / grid.step + 1e-9));
  std::vector<double> points;
  points.reserve(n + 1);
  for (long i = 0; i <= n; ++i) points.push_back(grid.min + i * grid.step);
  return points;
}

std::string geometry_text(const RunConfig& cfg) {
  std::string out;
  for (const auto& row : geometry_rows(cfg).rows)
    out += row[0] + " = " + row[1] + " " + row[2] + "\n";
  return out;
}

std::string geometry_csv(const RunConfig& cfg) {
  std::string out = "key,value,unit\n";
  for (const auto& row : geometry_rows(cfg).rows)
    out += row[0] + "," + row[1] + "," + row[2] + "\n";
  return out;
}

OrderedJson geometry_json(const RunConfig& cfg) {
  OrderedJson doc;
  doc["parameters"] = parameters_json(cfg);
  doc["geometry"] = geometry_section(cfg);
  return doc;
}

StabilitySweep stability_sweep(const RunConfig& cfg, double mu_min,
                               double mu_max, double step) {
  if (!(step > 0.0) || !(mu_min < mu_max))
    throw std::domain_error("stability: need step > 0 and mu_min < mu_max");
  GridSpec spec;
  spec.min = mu_min;
  spec.max = mu_max;
  spec.step = step;

  StabilitySweep sweep;
  coherence::CoherenceParams p = cfg.coherence;
  for (double mu : make_grid(spec)) {
    p.mu = mu;
    const auto report = coherence::characteristic_roots(p);
    sweep.mu.push_back(mu);
    sweep.max_growth.push_back(report.max_growth_rate);
    sweep.runaway.push_back(report.is_runaway);
  }
  try {
    sweep.critical_mu =
        coherence::critical_mu(cfg.coherence.g_squared, mu_min, mu_max);
    sweep.has_critical = true;
  } catch (const coherence::BracketingError&) {
    sweep.has_critical = false;
  }
  return sweep;
}

StabilitySweep stability_single(const RunConfig& cfg, double mu) {
  StabilitySweep sweep;
  coherence::CoherenceParams p = cfg.coherence;
  p.mu = mu;
  const auto report = coherence::characteristic_roots(p);
  sweep.mu.push_back(mu);
  sweep.max_growth.push_back(report.max_growth_rate);
  sweep.runaway.push_back(report.is_runaway);
  return sweep;
}

std::string stability_csv(const StabilitySweep& sweep) {
  std::string out = "mu,max_growth,is_runaway\n";
  for (std::size_t i = 0; i < sweep.mu.size(); ++i) {
    out += format_number(sweep.mu[i]) + "," +
           format_number(sweep.max_growth[i]) + "," +
           (sweep.runaway[i] ? "true" : "false") + "\n";
  }
  out += sweep.has_critical
             ? "# critical_mu = " + format_number(sweep.critical_mu) + "\n"
             : "# critical_mu = none (no run-away onset inside the range)\n";
  return out;
}

OrderedJson stability_json(const StabilitySweep& sweep) {
  OrderedJson rows = OrderedJson::array();
  for (std::size_t i = 0; i < sweep.mu.size(); ++i)
    rows.push_back({{"mu", round_sig9(sweep.mu[i])},
                    {"max_growth", round_sig9(sweep.max_growth[i])},
                    {"is_runaway", static_cast<bool>(sweep.runaway[i])}});
  OrderedJson doc;
  doc["rows"] = rows;
  doc["critical_mu"] = sweep.has_critical
                           ? quantity(sweep.critical_mu, "dimensionless")
                           : OrderedJson(nullptr);
  return doc;
}

std::string spectrum_csv(const RunConfig& cfg) {
  const GridSpec grid = cfg.resolved_grid();
  const OrderedJson summary = spectrum_summary(cfg);
  std::string out;
  if (grid.domain == GridDomain::omega) {
    const spectrum::SpectrumTable table =
        spectrum::per_molecule_spectrum(make_grid(grid), cfg.spectrum);
    out = "omega_ev,dE_domega\n";
    for (std::size_t i = 0; i < table.omega_ev.size(); ++i)
      out += format_number(table.omega_ev[i]) + "," +
             format_number(table.de_domega[i]) + "\n";
  } else {
    const spectrum::WavelengthTable table =
        spectrum::spectrum_in_wavelength(make_grid(grid), cfg.spectrum);
    out = "lambda_nm,dE_dlambda\n";
    for (std::size_t i = 0; i < table.lambda_nm.size(); ++i)
      out += format_number(table.lambda_nm[i]) + "," +
             format_number(table.de_dlambda[i]) + "\n";
  }
  for (const auto& [key, value] : summary.items())
    out += "# " + key + " = " +
           format_number(value.at("value").get<double>()) + "\n";
  return out;
}

OrderedJson spectrum_json(const RunConfig& cfg) {
  const GridSpec grid = cfg.resolved_grid();
  OrderedJson doc;
  doc["parameters"] = parameters_json(cfg);
  doc["summary"] = spectrum_summary(cfg);
  OrderedJson table;
  if (grid.domain == GridDomain::omega) {
    const spectrum::SpectrumTable t =
        spectrum::per_molecule_spectrum(make_grid(grid), cfg.spectrum);
    OrderedJson omegas = OrderedJson::array();
    OrderedJson values = OrderedJson::array();
    for (std::size_t i = 0; i < t.omega_ev.size(); ++i) {
      omegas.push_back(round_sig9(t.omega_ev[i]));
      values.push_back(round_sig9(t.de_domega[i]));
    }
    table["omega_ev"] = omegas;
    table["dE_domega"] = values;
  } else {
    const spectrum::WavelengthTable t =
        spectrum::spectrum_in_wavelength(make_grid(grid), cfg.spectrum);
    OrderedJson lambdas = OrderedJson::array();
    OrderedJson values = OrderedJson::array();
    for (std::size_t i = 0; i < t.lambda_nm.size(); ++i) {
      lambdas.push_back(round_sig9(t.lambda_nm[i]));
      values.push_back(round_sig9(t.de_dlambda[i]));
    }
    table["lambda_nm"] = lambdas;
    table["dE_dlambda"] = values;
  }
  doc["table"] = table;
  return doc;
}

std::string flash_text(const RunConfig& cfg) {
  const geometry::CollapseState state = geometry::collapse_state(cfg.bubble);
  const OrderedJson f = flash_section(cfg, state);
  std::string out;
  for (const auto& [key, value] : f.items())
    out += key + " = " + format_number(value.at("value").get<double>()) +
           " " + value.at("unit").get<std::string>() + "\n";
  return out;
}

std::string flash_csv(const RunConfig& cfg) {
  const geometry::CollapseState state = geometry::collapse_state(cfg.bubble);
  const OrderedJson f = flash_section(cfg, state);
  std::string out = "key,value,unit\n";
  for (const auto& [key, value] : f.items())
    out += key + "," + format_number(value.at("value").get<double>()) + "," +
           value.at("unit").get<std::string>() + "\n";
  return out;
}

OrderedJson flash_json(const RunConfig& cfg) {
  const geometry::CollapseState state = geometry::collapse_state(cfg.bubble);
  OrderedJson doc;
  doc["parameters"] = parameters_json(cfg);
  doc["flash"] = flash_section(cfg, state);
  return doc;
}

OrderedJson build_report(const RunConfig& cfg) {
  OrderedJson doc;
  doc["schema"] = "sono-report/1";
  doc["parameters"] = parameters_json(cfg);
  doc["constants"] = constants_json();

  const geometry::CollapseState state =
      staged("geometry", [&] { return geometry::collapse_state(cfg.bubble); });
  doc["geometry"] = staged("geometry", [&] { return geometry_section(cfg); });
  doc["stability"] =
      staged("stability", [&] { return stability_section(cfg, state); });
  doc["spectrum"] = staged("spectrum", [&] { return spectrum_summary(cfg); });
  doc["flash"] = staged("flash", [&] { return flash_section(cfg, state); });
  return doc;
}

std::string render(const OrderedJson& doc) { return doc.dump(2) + "\n"; }

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    if (!std::cout) throw IoError("failed to write to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  out << content;
  out.flush();
  if (!out) throw IoError("failed while writing '" + path + "'");
}

}  // namespace sono::cli
