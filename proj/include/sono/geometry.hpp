// Frozen-molecule collapse geometry.
//
// Between the supersonic onset (radius R0, vapour spacing a0 = rho0^{-1/3})
// and the condensation radius R*, molecules pile up against the imploding
// interface in layers spaced by the liquid distance a while the transverse
// spacing shrinks as a_T(R) = a0 * R / R0. Condensation triggers when the
// local density reaches rho* = (1/3) a^{-3}, i.e. a_T = sqrt(3) a, and the
// molecules swept from the R0..R* shell form a thin condensing shell of
// thickness T at R*.
//
// Lengths are carried in cm internally; um and Angstrom appear only in the
// input parameter struct.

#pragma once

#include <stdexcept>

namespace sono::geometry {

inline constexpr double kCmPerUm = 1e-4;
inline constexpr double kCmPerAngstrom = 1e-8;

struct BubbleParams {
  double R0_um = 4.5;               // radius at supersonic onset
  double rho0_per_cm3 = 3e19;       // vapour density at onset
  double a_liquid_angstrom = 3.2;   // liquid H2O spacing
  double ambient_pressure_atm = 1.4;    // context only
  double vapour_temperature_k = 383.0;  // context only

  double R0_cm() const { return R0_um * kCmPerUm; }
  double a_liquid_cm() const { return a_liquid_angstrom * kCmPerAngstrom; }
};

struct CollapseState {
  double a0_cm = 0.0;              // onset spacing rho0^{-1/3}
  double r_star_cm = 0.0;          // condensation radius
  double a_t_star_cm = 0.0;        // transverse spacing at condensation
  double rho_star_per_cm3 = 0.0;   // critical density (1/3) a^{-3}
  double shell_thickness_cm = 0.0;
  double n_molecules = 0.0;        // total count in the bubble at onset
  double n_shell = 0.0;            // count in the condensing shell
};

// Throws std::domain_error when the parameters are unphysical
// (non-positive, or vapour at least as dense as the liquid).
void validate(const BubbleParams& b);

// a = rho^{-1/3}.
double spacing_from_density_cm(double rho_per_cm3);

// a_T(R) = a0 * R / R0 for 0 < R <= R0.
double transverse_spacing_cm(double radius_cm, const BubbleParams& b);

// N = (4 pi / 3) R0^3 rho0.
double molecule_count(const BubbleParams& b);

// R* = R0 * sqrt(3) * a / a0; requires sqrt(3) a <= a0.
double critical_radius_cm(const BubbleParams& b);

// rho* = (1/3) a^{-3}.
double critical_density_per_cm3(double a_liquid_cm);

// T = (R0^3 / R*^2) (a / a0)^3 [1 - R*^3 / R0^3].
double shell_thickness_cm(const BubbleParams& b);

// All of the above in one pass; n_shell comes from the shell-volume side
// 4 pi R*^2 T rho*, which by construction equals N (1 - R*^3/R0^3).
CollapseState collapse_state(const BubbleParams& b);

}  // namespace sono::geometry
