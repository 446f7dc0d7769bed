// Run configuration: built-in physical defaults, optionally overridden by a
// flat key/value JSON config file and then by command-line flags. Every
// override is tracked so reports can state where each number came from.

#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "sono/coherence.hpp"
#include "sono/flash.hpp"
#include "sono/geometry.hpp"
#include "sono/spectrum.hpp"

namespace sono::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

enum class GridDomain { omega, lambda };

struct GridSpec {
  GridDomain domain = GridDomain::omega;
  double min = 0.0;   // eV or nm, per domain
  double max = 0.0;   // 0/0/0 means "use the domain default"
  double step = 0.0;

  bool is_default() const { return min == 0.0 && max == 0.0 && step == 0.0; }
};

struct OutputSpec {
  OutputFormat format = OutputFormat::csv;
  std::string path;  // empty -> stdout
  GridSpec grid;
};

struct RunConfig {
  geometry::BubbleParams bubble;
  coherence::CoherenceParams coherence;
  spectrum::SpectrumParams spectrum;
  flash::FlashParams flash;
  OutputSpec output;

  // Dotted key -> "config" or "flag"; keys absent here are defaults.
  std::map<std::string, std::string> sources;

  // Grid with domain defaults applied: omega 0..3*omega0 step 0.02,
  // lambda 100..1000 nm step 1.
  GridSpec resolved_grid() const;
};

// Parse "min:max:step".
GridSpec parse_grid_spec(const std::string& text, GridDomain domain);

// Defaults overridden by the flat JSON object at `path`. Unknown keys and
// type mismatches are ConfigErrors; a missing/unreadable file is an IoError.
RunConfig load_config(const std::string& path);

// Defaults only.
RunConfig default_config();

// Apply one dotted-key override (the config-file code path and the flag
// code path both funnel through here).
void apply_override(RunConfig& cfg, const std::string& key, double value);
void apply_override(RunConfig& cfg, const std::string& key,
                    const std::string& value);

// Throws ConfigError / std::domain_error when parameters or the grid are out
// of range (omega grids must sit inside [0, 3*omega0]).
void validate(const RunConfig& cfg);

}  // namespace sono::cli
