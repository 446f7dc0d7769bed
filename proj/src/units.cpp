#include "sono/units.hpp"

#include <stdexcept>
#include <string>

namespace sono::units {

namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) {
    throw std::domain_error(std::string(what) + " must be > 0, got " +
                            std::to_string(x));
  }
}

}  // namespace

double wavelength_nm_to_ev(double lambda_nm) {
  require_positive(lambda_nm, "wavelength [nm]");
  return kTwoPiHbarCEvNm / lambda_nm;
}

double ev_to_wavelength_nm(double energy_ev) {
  require_positive(energy_ev, "photon energy [eV]");
  return kTwoPiHbarCEvNm / energy_ev;
}

double length_cm_to_inverse_ev(double x_cm) {
  require_positive(x_cm, "length [cm]");
  return x_cm / kHbarCEvCm;
}

double inverse_ev_to_length_cm(double x_inv_ev) {
  require_positive(x_inv_ev, "inverse energy [1/eV]");
  return x_inv_ev * kHbarCEvCm;
}

double inverse_ev_to_seconds(double x_inv_ev) {
  require_positive(x_inv_ev, "inverse energy [1/eV]");
  return x_inv_ev * kHbarEvS;
}

double seconds_to_inverse_ev(double t_s) {
  require_positive(t_s, "time [s]");
  return t_s / kHbarEvS;
}

}  // namespace sono::units
