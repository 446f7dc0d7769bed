// Rendering of pipeline results as human-readable text, CSV tables and
// machine-readable JSON. All numbers are serialized with 9 significant
// digits; identical configs therefore produce byte-identical output.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sono/config.hpp"

namespace sono::cli {

using OrderedJson = nlohmann::ordered_json;

// "%.9g" rendering and the matching value rounding used inside JSON.
std::string format_number(double value);
double round_sig9(double value);

// {"value": ..., "unit": ...} (+ "source" when given).
OrderedJson quantity(double value, const char* unit);
OrderedJson quantity(double value, const char* unit, const std::string& source);

// min, min+step, ... up to max (inclusive within half a step).
std::vector<double> make_grid(const GridSpec& grid);

// --- geometry ---------------------------------------------------------
std::string geometry_text(const RunConfig& cfg);
std::string geometry_csv(const RunConfig& cfg);
OrderedJson geometry_json(const RunConfig& cfg);

// --- stability --------------------------------------------------------
struct StabilitySweep {
  std::vector<double> mu;
  std::vector<double> max_growth;
  std::vector<bool> runaway;
  bool has_critical = false;
  double critical_mu = 0.0;
};

StabilitySweep stability_sweep(const RunConfig& cfg, double mu_min,
                               double mu_max, double step);
StabilitySweep stability_single(const RunConfig& cfg, double mu);
std::string stability_csv(const StabilitySweep& sweep);
OrderedJson stability_json(const StabilitySweep& sweep);

// --- spectrum ---------------------------------------------------------
std::string spectrum_csv(const RunConfig& cfg);
OrderedJson spectrum_json(const RunConfig& cfg);

// --- flash ------------------------------------------------------------
std::string flash_text(const RunConfig& cfg);
std::string flash_csv(const RunConfig& cfg);
OrderedJson flash_json(const RunConfig& cfg);

// --- full pipeline ----------------------------------------------------
// geometry -> stability at the condensation density -> spectrum -> flash,
// one document; errors carry a stage label.
OrderedJson build_report(const RunConfig& cfg);

// Serialize with a trailing newline.
std::string render(const OrderedJson& doc);

// Write to `path`, or stdout when the path is empty. Throws IoError.
void write_output(const std::string& path, const std::string& content);

}  // namespace sono::cli
