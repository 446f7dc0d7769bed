#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "sono/report.hpp"

using namespace sono;
using cli::GridDomain;
using cli::RunConfig;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "sono_test_cfg_" + std::to_string(counter++) + ".json";
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("grid spec parsing") {
  const auto grid = cli::parse_grid_spec("0:36.18:0.02", GridDomain::omega);
  CHECK(grid.min == 0.0);
  CHECK(grid.max == doctest::Approx(36.18));
  CHECK(grid.step == doctest::Approx(0.02));

  CHECK_THROWS_AS(cli::parse_grid_spec("1:2", GridDomain::omega),
                  cli::ConfigError);
  CHECK_THROWS_AS(cli::parse_grid_spec("a:b:c", GridDomain::omega),
                  cli::ConfigError);
  CHECK_THROWS_AS(cli::parse_grid_spec("1:2:0.1x", GridDomain::omega),
                  cli::ConfigError);
}

TEST_CASE("make_grid spans the range inclusively") {
  cli::GridSpec spec;
  spec.min = 0.0;
  spec.max = 1.0;
  spec.step = 0.25;
  const auto grid = cli::make_grid(spec);
  REQUIRE(grid.size() == 5);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == doctest::Approx(1.0));
}

TEST_CASE("config defaults and overrides") {
  const RunConfig defaults = cli::default_config();
  CHECK(defaults.bubble.R0_um == 4.5);
  CHECK(defaults.spectrum.opacity_cutoff_ev == 5.0);
  CHECK(defaults.coherence.mu_critical == -0.5);

  TempFile file(R"({
    "bubble.R0_um": 9.0,
    "spectrum.opacity_cutoff_ev": 6.0,
    "output.format": "json",
    "output.grid_domain": "lambda",
    "output.grid": "200:800:2"
  })");
  const RunConfig cfg = cli::load_config(file.path);
  CHECK(cfg.bubble.R0_um == 9.0);
  CHECK(cfg.spectrum.opacity_cutoff_ev == 6.0);
  CHECK(cfg.output.format == cli::OutputFormat::json);
  CHECK(cfg.output.grid.domain == GridDomain::lambda);
  CHECK(cfg.output.grid.min == 200.0);
  CHECK(cfg.sources.at("bubble.R0_um") == "config");
  CHECK(cfg.sources.count("bubble.rho0_per_cm3") == 0);
  cli::validate(cfg);
}

TEST_CASE("config rejects unknown keys and bad values") {
  {
    TempFile file(R"({"bubble.radius_um": 9.0})");
    CHECK_THROWS_AS(cli::load_config(file.path), cli::ConfigError);
  }
  {
    TempFile file(R"({"bubble.R0_um": "big"})");
    CHECK_THROWS_AS(cli::load_config(file.path), cli::ConfigError);
  }
  {
    TempFile file("not json at all {");
    CHECK_THROWS_AS(cli::load_config(file.path), cli::ConfigError);
  }
  CHECK_THROWS_AS(cli::load_config("no_such_config_file.json"), cli::IoError);
}

TEST_CASE("validation catches parameter and grid errors") {
  RunConfig cfg = cli::default_config();
  cfg.bubble.a_liquid_angstrom = 40.0;  // denser than the vapour
  CHECK_THROWS_AS(cli::validate(cfg), std::domain_error);

  cfg = cli::default_config();
  cfg.output.grid.domain = GridDomain::omega;
  cfg.output.grid.min = 0.0;
  cfg.output.grid.max = 40.0;  // beyond 3*omega0 = 36.18
  cfg.output.grid.step = 0.1;
  CHECK_THROWS_AS(cli::validate(cfg), std::domain_error);

  cfg = cli::default_config();
  cfg.output.grid.min = 1.0;
  cfg.output.grid.max = 1.0;
  cfg.output.grid.step = 0.1;
  CHECK_THROWS_AS(cli::validate(cfg), std::domain_error);
}

TEST_CASE("quantity objects carry value and unit") {
  const auto q = cli::quantity(0.774991378, "um");
  CHECK(q.at("value").get<double>() == doctest::Approx(0.774991378));
  CHECK(q.at("unit").get<std::string>() == "um");
  const auto qs = cli::quantity(1.0, "eV", "default");
  CHECK(qs.at("source").get<std::string>() == "default");
}

TEST_CASE("numbers render with 9 significant digits") {
  CHECK(cli::format_number(0.7749913782587965) == "0.774991378");
  CHECK(cli::format_number(11451105222.334795) == "1.14511052e+10");
  CHECK(cli::format_number(0.26) == "0.26");
}

TEST_CASE("geometry rendering") {
  const RunConfig cfg = cli::default_config();

  const std::string text = cli::geometry_text(cfg);
  CHECK(text.find("N_molecules = 1.14511052e+10 count") != std::string::npos);
  CHECK(text.find("R_star = 0.774991378 um") != std::string::npos);

  const std::string csv = cli::geometry_csv(cfg);
  CHECK(csv.rfind("key,value,unit\n", 0) == 0);
  CHECK(csv.find("shell_thickness,1.48385313e-05,cm") != std::string::npos);

  const auto json = cli::geometry_json(cfg);
  CHECK(json.at("geometry").at("N_molecules").at("value").get<double>() ==
        doctest::Approx(1.14511052e10));
  CHECK(json.at("parameters").at("bubble").at("R0").at("source")
            .get<std::string>() == "default");
}

TEST_CASE("stability sweep and rendering") {
  const RunConfig cfg = cli::default_config();
  const auto sweep = cli::stability_sweep(cfg, -1.0, 0.0, 0.125);
  REQUIRE(sweep.mu.size() == 9);
  CHECK(sweep.has_critical);
  CHECK(std::abs(sweep.critical_mu - (-0.5)) <= 1e-8);
  CHECK(sweep.runaway.front());
  CHECK_FALSE(sweep.runaway.back());

  const std::string csv = cli::stability_csv(sweep);
  CHECK(csv.rfind("mu,max_growth,is_runaway\n", 0) == 0);
  CHECK(csv.find("-0.625,0.5,true") != std::string::npos);
  const std::size_t footer = csv.find("# critical_mu = ");
  REQUIRE(footer != std::string::npos);
  CHECK(std::abs(std::stod(csv.substr(footer + 16)) - (-0.5)) <= 1e-8);

  const auto single = cli::stability_single(cfg, -0.625);
  CHECK(single.max_growth.front() == doctest::Approx(0.5));
  CHECK_FALSE(single.has_critical);

  CHECK_THROWS_AS(cli::stability_sweep(cfg, 0.0, 0.0, 0.1),
                  std::domain_error);
}

TEST_CASE("spectrum rendering in both domains") {
  RunConfig cfg = cli::default_config();

  SUBCASE("omega CSV starts at zero and carries the summary footer") {
    const std::string csv = cli::spectrum_csv(cfg);
    CHECK(csv.rfind("omega_ev,dE_domega\n", 0) == 0);
    CHECK(csv.find("\n0,0\n") != std::string::npos);
    CHECK(csv.find("# total_energy = 0.26\n") != std::string::npos);
    CHECK(csv.find("# normalization_K = 0.175459672\n") != std::string::npos);
  }

  SUBCASE("lambda CSV rises toward short wavelengths") {
    cfg.output.grid.domain = GridDomain::lambda;
    cfg.output.grid.min = 200.0;
    cfg.output.grid.max = 800.0;
    cfg.output.grid.step = 10.0;
    const std::string csv = cli::spectrum_csv(cfg);
    CHECK(csv.rfind("lambda_nm,dE_dlambda\n", 0) == 0);

    // parse the two data columns back and check monotone decrease
    std::vector<double> values;
    std::size_t pos = csv.find('\n') + 1;
    while (pos < csv.size() && csv[pos] != '#') {
      const std::size_t comma = csv.find(',', pos);
      const std::size_t eol = csv.find('\n', pos);
      values.push_back(std::stod(csv.substr(comma + 1, eol - comma - 1)));
      pos = eol + 1;
    }
    REQUIRE(values.size() == 61);
    for (std::size_t i = 1; i < values.size(); ++i)
      CHECK(values[i] < values[i - 1]);
  }

  SUBCASE("json document embeds summary and table") {
    const auto doc = cli::spectrum_json(cfg);
    CHECK(doc.at("summary").at("total_energy").at("value").get<double>() ==
          doctest::Approx(0.26));
    CHECK(doc.at("summary").at("detected_energy").at("value").get<double>() ==
          doctest::Approx(0.0318).epsilon(2e-3));
    CHECK(doc.at("table").at("omega_ev").size() ==
          doc.at("table").at("dE_domega").size());
  }
}

TEST_CASE("full report document") {
  const RunConfig cfg = cli::default_config();
  const auto doc = cli::build_report(cfg);

  CHECK(doc.at("schema") == "sono-report/1");
  CHECK(doc.at("constants").at("hbar_c").at("value").get<double>() ==
        doctest::Approx(197.327));
  CHECK(doc.at("geometry").at("R_star").at("value").get<double>() ==
        doctest::Approx(0.775).epsilon(1e-3));

  const auto& stability = doc.at("stability");
  CHECK(stability.at("mu_at_onset").at("value").get<double>() ==
        doctest::Approx(-0.0273861).epsilon(1e-4));
  CHECK(stability.at("mu_at_condensation").at("value").get<double>() ==
        doctest::Approx(-0.504295).epsilon(1e-4));
  CHECK(stability.at("is_runaway_at_condensation").get<bool>());
  CHECK(stability.at("critical_mu").at("value").get<double>() ==
        doctest::Approx(-0.5).epsilon(1e-7));
  CHECK(stability.at("transition_time").at("value").get<double>() ==
        doctest::Approx(5.4578e-15).epsilon(1e-4));

  CHECK(doc.at("spectrum").at("detected_energy").at("value").get<double>() ==
        doctest::Approx(0.0318).epsilon(2e-3));
  CHECK(doc.at("flash").at("flash_width").at("value").get<double>() ==
        doctest::Approx(66.6667).epsilon(1e-4));
  CHECK(doc.at("flash").at("cd_count_reference").at("value").get<double>() ==
        150.0);

  SUBCASE("rendering is deterministic") {
    CHECK(cli::render(cli::build_report(cfg)) ==
          cli::render(cli::build_report(cfg)));
  }

  SUBCASE("stage labels prefix propagated errors") {
    RunConfig bad = cfg;
    bad.bubble.a_liquid_angstrom = 40.0;
    try {
      cli::build_report(bad);
      FAIL("expected a domain error");
    } catch (const std::domain_error& e) {
      CHECK(std::string(e.what()).rfind("geometry:", 0) == 0);
    }
  }
}
