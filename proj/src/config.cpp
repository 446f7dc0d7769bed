#include "sono/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sono::cli {

namespace {

using nlohmann::json;

double* numeric_slot(RunConfig& cfg, const std::string& key) {
  auto& b = cfg.bubble;
  auto& c = cfg.coherence;
  auto& s = cfg.spectrum;
  auto& f = cfg.flash;
  if (key == "bubble.R0_um") return &b.R0_um;
  if (key == "bubble.rho0_per_cm3") return &b.rho0_per_cm3;
  if (key == "bubble.a_liquid_angstrom") return &b.a_liquid_angstrom;
  if (key == "bubble.ambient_pressure_atm") return &b.ambient_pressure_atm;
  if (key == "bubble.vapour_temperature_k") return &b.vapour_temperature_k;
  if (key == "coherence.omega0_ev") return &c.omega0_ev;
  if (key == "coherence.g_squared") return &c.g_squared;
  if (key == "coherence.mu") return &c.mu;
  if (key == "coherence.rho_critical_per_cm3") return &c.rho_critical_per_cm3;
  if (key == "spectrum.omega0_ev") return &s.omega0_ev;
  if (key == "spectrum.omega_rabi_ev") return &s.omega_rabi_ev;
  if (key == "spectrum.gamma_ev") return &s.gamma_ev;
  if (key == "spectrum.c1_squared") return &s.c1_squared;
  if (key == "spectrum.form_factor_coeff") return &s.form_factor_coeff;
  if (key == "spectrum.delta_e_ev") return &s.delta_e_ev;
  if (key == "spectrum.opacity_cutoff_ev") return &s.opacity_cutoff_ev;
  if (key == "flash.fluctuation_scale_cm") return &f.fluctuation_scale_cm;
  if (key == "flash.interface_speed_cm_per_s")
    return &f.interface_speed_cm_per_s;
  return nullptr;
}

}  // namespace

GridSpec parse_grid_spec(const std::string& text, GridDomain domain) {
  GridSpec grid;
  grid.domain = domain;
  double values[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t next = (i < 2) ? text.find(':', pos) : text.size();
    if (next == std::string::npos)
      throw ConfigError("grid spec must be min:max:step, got '" + text + "'");
    std::size_t used = 0;
    const std::string part = text.substr(pos, next - pos);
    try {
      values[i] = std::stod(part, &used);
    } catch (const std::exception&) {
      throw ConfigError("grid spec has a non-numeric field: '" + part + "'");
    }
    if (used != part.size())
      throw ConfigError("grid spec has a non-numeric field: '" + part + "'");
    pos = next + 1;
  }
  grid.min = values[0];
  grid.max = values[1];
  grid.step = values[2];
  return grid;
}

GridSpec RunConfig::resolved_grid() const {
  GridSpec grid = output.grid;
  if (grid.is_default()) {
    if (grid.domain == GridDomain::omega) {
      grid.min = 0.0;
      grid.max = 3.0 * spectrum.omega0_ev;
      grid.step = 0.02;
    } else {
      grid.min = 100.0;
      grid.max = 1000.0;
      grid.step = 1.0;
    }
  }
  return grid;
}

RunConfig default_config() { return RunConfig{}; }

void apply_override(RunConfig& cfg, const std::string& key, double value) {
  double* slot = numeric_slot(cfg, key);
  if (slot == nullptr)
    throw ConfigError("unknown numeric config key '" + key + "'");
  if (!std::isfinite(value))
    throw ConfigError("config key '" + key + "' must be finite");
  *slot = value;
}

void apply_override(RunConfig& cfg, const std::string& key,
                    const std::string& value) {
  if (key == "output.format") {
    if (value == "csv")
      cfg.output.format = OutputFormat::csv;
    else if (value == "json")
      cfg.output.format = OutputFormat::json;
    else
      throw ConfigError("output.format must be csv or json, got '" + value +
                        "'");
    return;
  }
  if (key == "output.path") {
    cfg.output.path = value;
    return;
  }
  if (key == "output.grid_domain") {
    if (value == "omega")
      cfg.output.grid.domain = GridDomain::omega;
    else if (value == "lambda")
      cfg.output.grid.domain = GridDomain::lambda;
    else
      throw ConfigError("output.grid_domain must be omega or lambda, got '" +
                        value + "'");
    return;
  }
  if (key == "output.grid") {
    const GridDomain domain = cfg.output.grid.domain;
    cfg.output.grid = parse_grid_spec(value, domain);
    return;
  }
  throw ConfigError("unknown string config key '" + key + "'");
}

RunConfig load_config(const std::string& path) {
  RunConfig cfg;
  if (path.empty()) return cfg;

  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");

  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " +
                      e.what());
  }
  if (!doc.is_object())
    throw ConfigError("config file must hold a single flat JSON object");

  for (const auto& [key, value] : doc.items()) {
    if (value.is_number()) {
      apply_override(cfg, key, value.get<double>());
    } else if (value.is_string()) {
      apply_override(cfg, key, value.get<std::string>());
    } else {
      throw ConfigError("config key '" + key +
                        "' must be a number or a string");
    }
    cfg.sources[key] = "config";
  }
  return cfg;
}

void validate(const RunConfig& cfg) {
  geometry::validate(cfg.bubble);
  if (!(cfg.coherence.omega0_ev > 0.0))
    throw std::domain_error("coherence: omega0 must be > 0");
  if (!(cfg.coherence.g_squared >= 0.0))
    throw std::domain_error("coherence: g_squared must be >= 0");
  if (!(cfg.coherence.rho_critical_per_cm3 > 0.0))
    throw std::domain_error("coherence: rho_critical must be > 0");
  const auto& s = cfg.spectrum;
  if (!(s.omega0_ev > 0.0) || !(s.omega_rabi_ev > 0.0) ||
      !(s.gamma_ev > 0.0) || !(s.c1_squared > 0.0) ||
      !(s.form_factor_coeff > 0.0) || !(s.delta_e_ev > 0.0) ||
      !(s.opacity_cutoff_ev > 0.0))
    throw std::domain_error("spectrum: all parameters must be > 0");
  if (!(cfg.flash.fluctuation_scale_cm > 0.0) ||
      !(cfg.flash.interface_speed_cm_per_s > 0.0))
    throw std::domain_error("flash: all parameters must be > 0");

  const GridSpec grid = cfg.resolved_grid();
  if (!(grid.step > 0.0)) throw std::domain_error("grid: step must be > 0");
  if (!(grid.min < grid.max))
    throw std::domain_error("grid: need min < max");
  if (grid.domain == GridDomain::omega) {
    if (grid.min < 0.0 || grid.max > 3.0 * s.omega0_ev)
      throw std::domain_error(
          "grid: omega range must lie inside [0, 3*omega0]");
  } else {
    if (!(grid.min > 0.0))
      throw std::domain_error("grid: wavelengths must be > 0");
  }
}

}  // namespace sono::cli
