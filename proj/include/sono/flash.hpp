// Coherence-domain bookkeeping and flash timing.
//
// The coherent field lives in domains of radius R_CD = pi/omega0 (~500 A for
// water). The flash width follows from interface-sphericity fluctuations of
// one CD size crossing the condensation radius at the local interface speed.

#pragma once

#include "sono/geometry.hpp"

namespace sono::flash {

struct FlashParams {
  double fluctuation_scale_cm = 1e-5;        // ~ one CD diameter
  double interface_speed_cm_per_s = 1.5e5;   // radius velocity near R*
};

// R_CD = pi / omega0, converted to cm.
double cd_radius_cm(double omega0_ev);

// Delta t = fluctuation scale / interface speed, in ps.
double flash_width_ps(const FlashParams& f);

// Condensing-shell volume over CD volume. A commonly quoted reference count
// is ~150; the plain volume ratio comes out near 2e3 and the two are
// reported side by side without reconciling them.
double cd_count_in_shell(const geometry::CollapseState& state,
                         double omega0_ev);

inline constexpr double kReferenceCdCount = 150.0;

}  // namespace sono::flash
