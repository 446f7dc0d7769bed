#include "sono/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sono/quadrature.hpp"
#include "sono/units.hpp"

namespace sono::spectrum {

namespace {

void validate(const SpectrumParams& p) {
  const auto bad = [](double x) { return !(x > 0.0); };
  if (bad(p.omega0_ev) || bad(p.omega_rabi_ev) || bad(p.gamma_ev) ||
      bad(p.c1_squared) || bad(p.form_factor_coeff) || bad(p.delta_e_ev) ||
      bad(p.opacity_cutoff_ev))
    throw std::domain_error("spectrum: all parameters must be > 0");
}

// Bound on integral(shape, X..inf). The Lorentzian denominator is at least
// Gamma^2/4, so the tail is majorized by (4/Gamma^2) * w^2 exp(-c w^2) with
// c = 2b/w0^2, whose tail integral is
//   X exp(-c X^2)/(2c) + sqrt(pi) erfc(sqrt(c) X) / (4 c^{3/2}).
double tail_bound_ev(const SpectrumParams& p, double x) {
  const double c =
      2.0 * p.form_factor_coeff / (p.omega0_ev * p.omega0_ev);
  const double gauss_tail =
      x * std::exp(-c * x * x) / (2.0 * c) +
      std::sqrt(std::numbers::pi) * std::erfc(std::sqrt(c) * x) /
          (4.0 * c * std::sqrt(c));
  return 4.0 / (p.gamma_ev * p.gamma_ev) * gauss_tail;
}

}  // namespace

double spectral_shape(double omega_ev, const SpectrumParams& p) {
  validate(p);
  if (omega_ev < 0.0)
    throw std::domain_error("spectral_shape: omega must be >= 0");
  const double u = omega_ev / p.omega0_ev;
  const double form_sq = std::exp(-2.0 * p.form_factor_coeff * u * u);
  const double detune = omega_ev - p.omega_rabi_ev;
  const double half_width_sq = 0.25 * p.gamma_ev * p.gamma_ev;
  return form_sq * omega_ev * omega_ev / (detune * detune + half_width_sq);
}

Calibration calibrate_normalization(const SpectrumParams& p, double rel_tol) {
  validate(p);
  if (!(rel_tol > 0.0) || rel_tol > 1e-4)
    throw std::domain_error(
        "calibrate_normalization: rel_tol must be in (0, 1e-4]");

  const auto shape = [&p](double w) { return spectral_shape(w, p); };

  Calibration cal;
  cal.omega_max_ev = 3.0 * p.omega0_ev;
  cal.shape_integral_ev =
      numeric::integrate(shape, 0.0, cal.omega_max_ev, rel_tol);
  cal.tail_bound_ev = tail_bound_ev(p, cal.omega_max_ev);

  // The form factor makes the remainder negligible at 3 w0 for the default
  // parameters; for wider lines, extend until the bound clears 1e-10 of the
  // running total.
  int doublings = 0;
  while (cal.tail_bound_ev > 1e-10 * cal.shape_integral_ev) {
    if (++doublings > 16)
      throw numeric::QuadratureError(
          "calibrate_normalization: spectral tail does not decay",
          cal.tail_bound_ev / cal.shape_integral_ev);
    const double next_max = 2.0 * cal.omega_max_ev;
    cal.shape_integral_ev +=
        numeric::integrate(shape, cal.omega_max_ev, next_max, rel_tol);
    cal.omega_max_ev = next_max;
    cal.tail_bound_ev = tail_bound_ev(p, cal.omega_max_ev);
  }

  cal.normalization_k = p.delta_e_ev / cal.shape_integral_ev;
  return cal;
}

SpectrumTable per_molecule_spectrum(const std::vector<double>& omega_grid_ev,
                                    const SpectrumParams& p) {
  if (omega_grid_ev.empty())
    throw std::domain_error("per_molecule_spectrum: empty grid");
  if (!std::is_sorted(omega_grid_ev.begin(), omega_grid_ev.end()))
    throw std::domain_error("per_molecule_spectrum: grid must be ascending");
  if (omega_grid_ev.front() < 0.0)
    throw std::domain_error("per_molecule_spectrum: grid must be nonnegative");

  const Calibration cal = calibrate_normalization(p);

  SpectrumTable table;
  table.omega_ev = omega_grid_ev;
  table.de_domega.reserve(omega_grid_ev.size());
  table.normalization_k = cal.normalization_k;
  std::size_t peak_index = 0;
  for (std::size_t i = 0; i < omega_grid_ev.size(); ++i) {
    const double s = cal.normalization_k * spectral_shape(omega_grid_ev[i], p);
    table.de_domega.push_back(s);
    if (s > table.de_domega[peak_index]) peak_index = i;
  }
  table.peak_omega_ev = omega_grid_ev[peak_index];
  table.total_energy_ev = cal.normalization_k * cal.shape_integral_ev;
  table.detected_energy_ev = detected_energy_ev(p);
  return table;
}

double detected_energy_ev(const SpectrumParams& p, double rel_tol) {
  return detected_energy_ev(p, p.opacity_cutoff_ev, rel_tol);
}

double detected_energy_ev(const SpectrumParams& p, double cutoff_ev,
                          double rel_tol) {
  validate(p);
  if (!(cutoff_ev > 0.0))
    throw std::domain_error("detected_energy: cutoff must be > 0");
  const Calibration cal = calibrate_normalization(p, rel_tol);
  const double upper = std::min(cutoff_ev, cal.omega_max_ev);
  const auto shape = [&p](double w) { return spectral_shape(w, p); };
  return cal.normalization_k * numeric::integrate(shape, 0.0, upper, rel_tol);
}

WavelengthTable spectrum_in_wavelength(
    const std::vector<double>& lambda_grid_nm, const SpectrumParams& p) {
  if (lambda_grid_nm.empty())
    throw std::domain_error("spectrum_in_wavelength: empty grid");
  if (!std::is_sorted(lambda_grid_nm.begin(), lambda_grid_nm.end()))
    throw std::domain_error("spectrum_in_wavelength: grid must be ascending");
  if (!(lambda_grid_nm.front() > 0.0))
    throw std::domain_error("spectrum_in_wavelength: grid must be positive");

  const Calibration cal = calibrate_normalization(p);

  WavelengthTable table;
  table.lambda_nm = lambda_grid_nm;
  table.de_dlambda.reserve(lambda_grid_nm.size());
  for (double lambda : lambda_grid_nm) {
    // |dw/dlambda| = w^2 / (2 pi hbar c)
    const double w = units::wavelength_nm_to_ev(lambda);
    const double jacobian = w * w / units::kTwoPiHbarCEvNm;
    table.de_dlambda.push_back(cal.normalization_k * spectral_shape(w, p) *
                               jacobian);
  }
  return table;
}

FlashEnergyBudget flash_energy_budget(double n_shell,
                                      const SpectrumParams& p) {
  if (!(n_shell > 0.0))
    throw std::domain_error("flash_energy_budget: molecule count must be > 0");
  FlashEnergyBudget budget;
  budget.total_ev = n_shell * p.delta_e_ev;
  budget.detected_ev = n_shell * detected_energy_ev(p);
  budget.total_joule = budget.total_ev * units::kEvToJoule;
  budget.detected_joule = budget.detected_ev * units::kEvToJoule;
  return budget;
}

double literal_prefactor_ev3(const SpectrumParams& p) {
  validate(p);
  const double w0_cubed = p.omega0_ev * p.omega0_ev * p.omega0_ev;
  const double pi_cubed = std::numbers::pi * std::numbers::pi * std::numbers::pi;
  return 3.0 * w0_cubed * p.c1_squared / (16.0 * pi_cubed);
}

double literal_prefactor_per_molecule(const SpectrumParams& p,
                                      double rho_liquid_per_cm3) {
  if (!(rho_liquid_per_cm3 > 0.0))
    throw std::domain_error("literal_prefactor: liquid density must be > 0");
  // Density in natural units: molecules per (1/eV)^3.
  const double density_natural =
      rho_liquid_per_cm3 * units::kHbarCEvCm * units::kHbarCEvCm *
      units::kHbarCEvCm;
  return literal_prefactor_ev3(p) / density_natural;
}

}  // namespace sono::spectrum
