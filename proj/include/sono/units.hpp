// Natural-units conversion layer (hbar = c = k_B = 1).
//
// Every module in this library computes in eV / 1/eV internally; laboratory
// units (cm, nm, s) appear only at API boundaries, through the functions
// below. The conversion scales are pinned so that every derived number is
// reproducible bit for bit.

#pragma once

#include <numbers>

namespace sono::units {

// Fixed conversion scales.
inline constexpr double kHbarCEvNm = 197.327;           // hbar*c [eV nm]
inline constexpr double kHbarCEvCm = 197.327e-7;        // hbar*c [eV cm]
inline constexpr double kHbarEvS = 6.58212e-16;         // hbar   [eV s]
inline constexpr double kEvToJoule = 1.602176634e-19;   // [J/eV]
inline constexpr double kTwoPiHbarCEvNm =
    2.0 * std::numbers::pi * kHbarCEvNm;                // 2*pi*hbar*c ~ 1239.84 eV nm

// Photon wavelength <-> energy: E = 2*pi*hbar*c / lambda.
double wavelength_nm_to_ev(double lambda_nm);
double ev_to_wavelength_nm(double energy_ev);

// Length <-> inverse energy: x [1/eV] = x [cm] / (hbar*c [eV cm]).
double length_cm_to_inverse_ev(double x_cm);
double inverse_ev_to_length_cm(double x_inv_ev);

// Time <-> inverse energy: t [s] = x [1/eV] * hbar [eV s].
double inverse_ev_to_seconds(double x_inv_ev);
double seconds_to_inverse_ev(double t_s);

// The fixed constants as a value, for reporting.
struct PhysicalConstants {
  double hbar_c_ev_nm = kHbarCEvNm;
  double hbar_c_ev_cm = kHbarCEvCm;
  double hbar_ev_s = kHbarEvS;
  double ev_to_joule = kEvToJoule;
};

inline PhysicalConstants constants() { return PhysicalConstants{}; }

}  // namespace sono::units
