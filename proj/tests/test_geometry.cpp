#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sono/geometry.hpp"

#include "oracles.hpp"

using namespace sono;
using geometry::BubbleParams;

TEST_CASE("spacing from density") {
  CHECK(geometry::spacing_from_density_cm(3e19) ==
        doctest::Approx(3.22e-7).epsilon(2e-3));
  CHECK(geometry::spacing_from_density_cm(1.0) == doctest::Approx(1.0));
  CHECK(geometry::spacing_from_density_cm(3.05e22) ==
        doctest::Approx(3.2e-8).epsilon(2e-3));
  CHECK_THROWS_AS(geometry::spacing_from_density_cm(0.0), std::domain_error);

  // inverse of x -> x^-3 on lengths
  for (double a = 1e-8; a < 1e-3; a *= 4.1) {
    const double rho = 1.0 / (a * a * a);
    CHECK(oracles::rel_diff(geometry::spacing_from_density_cm(rho), a) <
          1e-12);
  }
}

TEST_CASE("transverse spacing scales linearly with radius") {
  BubbleParams b;
  const double a0 = geometry::spacing_from_density_cm(b.rho0_per_cm3);
  CHECK(geometry::transverse_spacing_cm(b.R0_cm(), b) == doctest::Approx(a0));
  CHECK(geometry::transverse_spacing_cm(0.5 * b.R0_cm(), b) ==
        doctest::Approx(0.5 * a0));
  // at R = 0.78 um the spacing is close to sqrt(3) * a_liquid
  CHECK(geometry::transverse_spacing_cm(0.78e-4, b) ==
        doctest::Approx(std::sqrt(3.0) * 3.2e-8).epsilon(1e-2));
  CHECK_THROWS_AS(geometry::transverse_spacing_cm(0.0, b), std::domain_error);
  CHECK_THROWS_AS(geometry::transverse_spacing_cm(1.1 * b.R0_cm(), b),
                  std::domain_error);
}

TEST_CASE("molecule count") {
  BubbleParams b;
  CHECK(geometry::molecule_count(b) ==
        doctest::Approx(1.14e10).epsilon(0.01));

  BubbleParams doubled = b;
  doubled.rho0_per_cm3 *= 2.0;
  CHECK(geometry::molecule_count(doubled) ==
        doctest::Approx(2.0 * geometry::molecule_count(b)));

  BubbleParams big = b;
  big.R0_um = 9.0;
  CHECK(geometry::molecule_count(big) ==
        doctest::Approx(9.16e10).epsilon(1e-3));
}

TEST_CASE("critical radius") {
  BubbleParams b;
  const double r_star_um = geometry::critical_radius_cm(b) / geometry::kCmPerUm;
  CHECK(r_star_um == doctest::Approx(0.78).epsilon(0.01));
  CHECK(std::abs(r_star_um - 0.8) / 0.8 < 0.05);

  SUBCASE("a_liquid -> a0/sqrt(3): condensation right at onset") {
    BubbleParams edge = b;
    const double a0 = geometry::spacing_from_density_cm(edge.rho0_per_cm3);
    edge.a_liquid_angstrom =
        a0 / std::sqrt(3.0) / geometry::kCmPerAngstrom * (1.0 - 1e-12);
    CHECK(geometry::critical_radius_cm(edge) ==
          doctest::Approx(edge.R0_cm()).epsilon(1e-11));
  }
  SUBCASE("linear in R0") {
    BubbleParams big = b;
    big.R0_um = 9.0;
    CHECK(geometry::critical_radius_cm(big) ==
          doctest::Approx(2.0 * geometry::critical_radius_cm(b)));
  }
  SUBCASE("vapour denser than critical is rejected") {
    BubbleParams bad = b;
    bad.a_liquid_angstrom = 22.0;  // sqrt(3)*a > a0 = 32.18 A, but a < a0
    CHECK_THROWS_AS(geometry::critical_radius_cm(bad), std::domain_error);
  }
}

TEST_CASE("critical density") {
  CHECK(geometry::critical_density_per_cm3(3.2e-8) ==
        doctest::Approx(1.02e22).epsilon(3e-3));
  CHECK(geometry::critical_density_per_cm3(1.0) == doctest::Approx(1.0 / 3.0));
  CHECK(geometry::critical_density_per_cm3(0.5) ==
        doctest::Approx(8.0 / 3.0));
  CHECK_THROWS_AS(geometry::critical_density_per_cm3(0.0), std::domain_error);
}

TEST_CASE("shell thickness") {
  BubbleParams b;
  const double t = geometry::shell_thickness_cm(b);
  const double r_star = geometry::critical_radius_cm(b);
  CHECK(std::abs(t - 1.4e-5) / 1.4e-5 < 0.10);
  CHECK(std::abs(t - r_star / 5.7) / (r_star / 5.7) < 0.10);

  SUBCASE("R* -> R0 limit empties the shell") {
    BubbleParams edge = b;
    const double a0 = geometry::spacing_from_density_cm(edge.rho0_per_cm3);
    edge.a_liquid_angstrom =
        a0 / std::sqrt(3.0) / geometry::kCmPerAngstrom * (1.0 - 1e-12);
    CHECK(geometry::shell_thickness_cm(edge) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("collapse state ties the pieces together") {
  BubbleParams b;
  const auto s = geometry::collapse_state(b);
  CHECK(s.r_star_cm / geometry::kCmPerUm == doctest::Approx(0.78).epsilon(0.01));
  CHECK(s.shell_thickness_cm == doctest::Approx(1.4e-5).epsilon(0.10));
  CHECK(s.rho_star_per_cm3 == doctest::Approx(1.02e22).epsilon(3e-3));
  CHECK(s.n_molecules == doctest::Approx(1.14e10).epsilon(0.01));
  CHECK(s.a_t_star_cm ==
        doctest::Approx(std::sqrt(3.0) * b.a_liquid_cm()).epsilon(1e-15));
  CHECK(s.n_shell / s.n_molecules == doctest::Approx(0.995).epsilon(1e-3));
  CHECK(s.r_star_cm > 0.0);
  CHECK(s.r_star_cm < b.R0_cm());
  CHECK(s.shell_thickness_cm < s.r_star_cm);

  SUBCASE("bubble radius doubled: R*, T double and N scales by 8") {
    BubbleParams big = b;
    big.R0_um *= 2.0;
    const auto sb = geometry::collapse_state(big);
    CHECK(sb.r_star_cm == doctest::Approx(2.0 * s.r_star_cm).epsilon(1e-14));
    CHECK(sb.shell_thickness_cm ==
          doctest::Approx(2.0 * s.shell_thickness_cm).epsilon(1e-14));
    CHECK(sb.n_molecules ==
          doctest::Approx(8.0 * s.n_molecules).epsilon(1e-14));
  }
}

TEST_CASE("molecule conservation identity over random bubbles") {
  std::mt19937_64 rng(7151998);
  std::uniform_real_distribution<double> r0(0.5, 50.0);       // um
  std::uniform_real_distribution<double> rho0(1e18, 5e20);    // 1/cm^3
  std::uniform_real_distribution<double> a_liq(1.0, 5.0);     // angstrom

  int tested = 0;
  while (tested < 100) {
    BubbleParams b;
    b.R0_um = r0(rng);
    b.rho0_per_cm3 = rho0(rng);
    b.a_liquid_angstrom = a_liq(rng);
    const double a0 = geometry::spacing_from_density_cm(b.rho0_per_cm3);
    if (!(std::sqrt(3.0) * b.a_liquid_cm() < a0)) continue;
    ++tested;

    const auto s = geometry::collapse_state(b);
    // shell side of the molecule count vs swept-volume side
    const double lhs = 4.0 * std::numbers::pi * s.r_star_cm * s.r_star_cm *
                       s.shell_thickness_cm * s.rho_star_per_cm3;
    const double swept =
        1.0 - std::pow(s.r_star_cm / b.R0_cm(), 3.0);
    const double rhs = s.n_molecules * swept;
    CHECK(oracles::rel_diff(lhs, rhs) < 1e-12);
    CHECK(oracles::rel_diff(s.n_shell, rhs) < 1e-12);
    // transverse spacing at R* equals sqrt(3) a_liquid
    CHECK(oracles::rel_diff(geometry::transverse_spacing_cm(s.r_star_cm, b),
                            std::sqrt(3.0) * b.a_liquid_cm()) < 1e-12);
  }
}

TEST_CASE("critical radius is monotone in R0, a_liquid and rho0") {
  BubbleParams b;
  const double base = geometry::critical_radius_cm(b);

  BubbleParams larger_r0 = b;
  larger_r0.R0_um += 1.0;
  CHECK(geometry::critical_radius_cm(larger_r0) > base);

  BubbleParams larger_a = b;
  larger_a.a_liquid_angstrom += 0.5;
  CHECK(geometry::critical_radius_cm(larger_a) > base);

  BubbleParams denser = b;
  denser.rho0_per_cm3 *= 2.0;
  CHECK(geometry::critical_radius_cm(denser) > base);
}

TEST_CASE("parameter validation") {
  BubbleParams bad;
  bad.R0_um = 0.0;
  CHECK_THROWS_AS(geometry::validate(bad), std::domain_error);

  bad = BubbleParams{};
  bad.rho0_per_cm3 = -1.0;
  CHECK_THROWS_AS(geometry::validate(bad), std::domain_error);

  // vapour at least as dense as the liquid
  bad = BubbleParams{};
  bad.a_liquid_angstrom = 40.0;  // a0 = 32.18 A at the default density
  CHECK_THROWS_AS(geometry::validate(bad), std::domain_error);
}
