#include "sono/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sono::geometry {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;
constexpr double kFourPiThirds = kFourPi / 3.0;

}  // namespace

void validate(const BubbleParams& b) {
  if (!(b.R0_um > 0.0))
    throw std::domain_error("bubble: R0 must be > 0");
  if (!(b.rho0_per_cm3 > 0.0))
    throw std::domain_error("bubble: rho0 must be > 0");
  if (!(b.a_liquid_angstrom > 0.0))
    throw std::domain_error("bubble: a_liquid must be > 0");
  const double a0 = spacing_from_density_cm(b.rho0_per_cm3);
  if (!(a0 > b.a_liquid_cm()))
    throw std::domain_error(
        "bubble: vapour spacing a0 = " + std::to_string(a0) +
        " cm must exceed the liquid spacing " +
        std::to_string(b.a_liquid_cm()) + " cm");
}

double spacing_from_density_cm(double rho_per_cm3) {
  if (!(rho_per_cm3 > 0.0))
    throw std::domain_error("spacing_from_density: density must be > 0");
  return std::pow(rho_per_cm3, -1.0 / 3.0);
}

double transverse_spacing_cm(double radius_cm, const BubbleParams& b) {
  validate(b);
  if (!(radius_cm > 0.0) || radius_cm > b.R0_cm())
    throw std::domain_error("transverse_spacing: radius must be in (0, R0]");
  return spacing_from_density_cm(b.rho0_per_cm3) * radius_cm / b.R0_cm();
}

double molecule_count(const BubbleParams& b) {
  validate(b);
  const double r0 = b.R0_cm();
  return kFourPiThirds * r0 * r0 * r0 * b.rho0_per_cm3;
}

double critical_radius_cm(const BubbleParams& b) {
  validate(b);
  const double a0 = spacing_from_density_cm(b.rho0_per_cm3);
  const double a_t_star = std::sqrt(3.0) * b.a_liquid_cm();
  if (a_t_star > a0)
    throw std::domain_error(
        "critical_radius: sqrt(3)*a_liquid exceeds a0; the vapour is already "
        "denser than the condensation density");
  return b.R0_cm() * a_t_star / a0;
}

double critical_density_per_cm3(double a_liquid_cm) {
  if (!(a_liquid_cm > 0.0))
    throw std::domain_error("critical_density: spacing must be > 0");
  return 1.0 / (3.0 * a_liquid_cm * a_liquid_cm * a_liquid_cm);
}

double shell_thickness_cm(const BubbleParams& b) {
  const double r0 = b.R0_cm();
  const double r_star = critical_radius_cm(b);
  const double a0 = spacing_from_density_cm(b.rho0_per_cm3);
  const double ratio = b.a_liquid_cm() / a0;
  const double swept = 1.0 - (r_star * r_star * r_star) / (r0 * r0 * r0);
  return (r0 * r0 * r0) / (r_star * r_star) * ratio * ratio * ratio * swept;
}

CollapseState collapse_state(const BubbleParams& b) {
  CollapseState s;
  s.a0_cm = spacing_from_density_cm(b.rho0_per_cm3);
  s.r_star_cm = critical_radius_cm(b);
  s.a_t_star_cm = std::sqrt(3.0) * b.a_liquid_cm();
  s.rho_star_per_cm3 = critical_density_per_cm3(b.a_liquid_cm());
  s.shell_thickness_cm = shell_thickness_cm(b);
  s.n_molecules = molecule_count(b);
  s.n_shell = kFourPi * s.r_star_cm * s.r_star_cm * s.shell_thickness_cm *
              s.rho_star_per_cm3;
  return s;
}

}  // namespace sono::geometry
