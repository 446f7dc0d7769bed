// sono: coherent vapour-condensation model of single-bubble
// sonoluminescence.
//
// Subcommands
//   geometry   collapse geometry at condensation (R*, shell, molecule counts)
//   stability  growth-rate sweep of the amplitude equation over mu
//   spectrum   per-molecule emission spectrum (omega or lambda domain)
//   flash      coherence-domain sizes, energy budget and flash timing
//   report     full pipeline in one JSON document
//
// Exit codes: 0 success, 2 parameter/config error, 3 I/O error.

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sono/report.hpp"

namespace {

using sono::cli::OutputFormat;
using sono::cli::RunConfig;

struct CommonFlags {
  std::string config_path;
  std::string out_path;
  std::string format;
  std::string grid;
  std::string domain;
  std::optional<double> cutoff;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_grid) {
  cmd->add_option("--config", flags.config_path,
                  "flat JSON config file (defaults are built in)");
  cmd->add_option("--out", flags.out_path, "output path (default: stdout)");
  cmd->add_option("--format", flags.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  if (with_grid) {
    cmd->add_option("--grid", flags.grid, "grid as min:max:step");
    cmd->add_option("--domain", flags.domain, "grid domain: omega|lambda")
        ->check(CLI::IsMember({"omega", "lambda"}));
    cmd->add_option("--cutoff", flags.cutoff, "opacity cutoff [eV]");
  }
}

RunConfig make_config(const CommonFlags& flags) {
  RunConfig cfg = sono::cli::load_config(flags.config_path);
  if (!flags.format.empty()) {
    apply_override(cfg, "output.format", flags.format);
    cfg.sources["output.format"] = "flag";
  }
  if (!flags.out_path.empty()) {
    apply_override(cfg, "output.path", flags.out_path);
    cfg.sources["output.path"] = "flag";
  }
  if (!flags.domain.empty()) {
    apply_override(cfg, "output.grid_domain", flags.domain);
    cfg.sources["output.grid_domain"] = "flag";
  }
  if (!flags.grid.empty()) {
    apply_override(cfg, "output.grid", flags.grid);
    cfg.sources["output.grid"] = "flag";
  }
  if (flags.cutoff.has_value()) {
    apply_override(cfg, "spectrum.opacity_cutoff_ev", *flags.cutoff);
    cfg.sources["spectrum.opacity_cutoff_ev"] = "flag";
  }
  sono::cli::validate(cfg);
  return cfg;
}

bool format_given(const RunConfig& cfg) {
  return cfg.sources.count("output.format") != 0;
}

int run_geometry(const CommonFlags& flags) {
  const RunConfig cfg = make_config(flags);
  std::string content;
  if (format_given(cfg) && cfg.output.format == OutputFormat::json)
    content = sono::cli::render(sono::cli::geometry_json(cfg));
  else if (format_given(cfg))
    content = sono::cli::geometry_csv(cfg);
  else
    content = sono::cli::geometry_text(cfg);
  sono::cli::write_output(cfg.output.path, content);
  return 0;
}

int run_stability(const CommonFlags& flags, const std::string& mu_range,
                  std::optional<double> mu_single,
                  std::optional<double> g_squared) {
  RunConfig cfg = make_config(flags);
  if (g_squared.has_value()) {
    apply_override(cfg, "coherence.g_squared", *g_squared);
    cfg.sources["coherence.g_squared"] = "flag";
    sono::cli::validate(cfg);
  }

  sono::cli::StabilitySweep sweep;
  if (mu_single.has_value()) {
    sweep = sono::cli::stability_single(cfg, *mu_single);
  } else {
    auto spec = sono::cli::parse_grid_spec(
        mu_range.empty() ? "-1:0:0.01" : mu_range,
        sono::cli::GridDomain::omega);
    sweep = sono::cli::stability_sweep(cfg, spec.min, spec.max, spec.step);
  }

  const std::string content =
      (format_given(cfg) && cfg.output.format == OutputFormat::json)
          ? sono::cli::render(sono::cli::stability_json(sweep))
          : sono::cli::stability_csv(sweep);
  sono::cli::write_output(cfg.output.path, content);
  return 0;
}

int run_spectrum(const CommonFlags& flags) {
  const RunConfig cfg = make_config(flags);
  const std::string content =
      (format_given(cfg) && cfg.output.format == OutputFormat::json)
          ? sono::cli::render(sono::cli::spectrum_json(cfg))
          : sono::cli::spectrum_csv(cfg);
  sono::cli::write_output(cfg.output.path, content);
  return 0;
}

int run_flash(const CommonFlags& flags) {
  const RunConfig cfg = make_config(flags);
  std::string content;
  if (format_given(cfg) && cfg.output.format == OutputFormat::json)
    content = sono::cli::render(sono::cli::flash_json(cfg));
  else if (format_given(cfg))
    content = sono::cli::flash_csv(cfg);
  else
    content = sono::cli::flash_text(cfg);
  sono::cli::write_output(cfg.output.path, content);
  return 0;
}

int run_report(const CommonFlags& flags) {
  const RunConfig cfg = make_config(flags);
  sono::cli::write_output(cfg.output.path,
                          sono::cli::render(sono::cli::build_report(cfg)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "QED-coherence model of single-bubble sonoluminescence: collapse "
      "geometry, run-away threshold, emission spectrum and flash timing"};
  app.require_subcommand(1);

  CommonFlags geometry_flags, stability_flags, spectrum_flags, flash_flags,
      report_flags;
  std::string mu_range;
  std::optional<double> mu_single, g_squared;

  auto* cmd_geometry =
      app.add_subcommand("geometry", "collapse geometry at condensation");
  add_common(cmd_geometry, geometry_flags, false);

  auto* cmd_stability =
      app.add_subcommand("stability", "growth-rate sweep over mu");
  add_common(cmd_stability, stability_flags, false);
  cmd_stability->add_option("--mu-range", mu_range,
                            "mu sweep as min:max:step (default -1:0:0.01)");
  cmd_stability->add_option("--mu", mu_single, "single mu value");
  cmd_stability->add_option("--g2", g_squared, "coupling g^2");

  auto* cmd_spectrum =
      app.add_subcommand("spectrum", "per-molecule emission spectrum");
  add_common(cmd_spectrum, spectrum_flags, true);

  auto* cmd_flash =
      app.add_subcommand("flash", "flash timing and energy budget");
  add_common(cmd_flash, flash_flags, false);

  auto* cmd_report = app.add_subcommand("report", "full pipeline JSON");
  add_common(cmd_report, report_flags, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_geometry->parsed()) return run_geometry(geometry_flags);
    if (cmd_stability->parsed())
      return run_stability(stability_flags, mu_range, mu_single, g_squared);
    if (cmd_spectrum->parsed()) return run_spectrum(spectrum_flags);
    if (cmd_flash->parsed()) return run_flash(flash_flags);
    if (cmd_report->parsed()) return run_report(report_flags);
  } catch (const sono::cli::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
