#include "sono/flash.hpp"

#include <numbers>
#include <stdexcept>

#include "sono/units.hpp"

namespace sono::flash {

double cd_radius_cm(double omega0_ev) {
  if (!(omega0_ev > 0.0))
    throw std::domain_error("cd_radius: omega0 must be > 0");
  return units::inverse_ev_to_length_cm(std::numbers::pi / omega0_ev);
}

double flash_width_ps(const FlashParams& f) {
  if (!(f.fluctuation_scale_cm > 0.0) || !(f.interface_speed_cm_per_s > 0.0))
    throw std::domain_error("flash_width: parameters must be > 0");
  return f.fluctuation_scale_cm / f.interface_speed_cm_per_s * 1e12;
}

double cd_count_in_shell(const geometry::CollapseState& state,
                         double omega0_ev) {
  if (!(state.r_star_cm > 0.0) || !(state.shell_thickness_cm >= 0.0))
    throw std::domain_error("cd_count_in_shell: invalid collapse state");
  const double r_cd = cd_radius_cm(omega0_ev);
  const double shell_volume = 4.0 * std::numbers::pi * state.r_star_cm *
                              state.r_star_cm * state.shell_thickness_cm;
  const double cd_volume =
      4.0 / 3.0 * std::numbers::pi * r_cd * r_cd * r_cd;
  return shell_volume / cd_volume;
}

}  // namespace sono::flash
