#pragma once

#include "ilac/link_model.hpp"

namespace ilac {

struct Point {
  double x_m = 0.0;
  double y_m = 0.0;
};

// CRB of the AoA estimate at the ULA, rad^2. Independent of bandwidth.
double crb_aoa(const SystemConfig& config, const LinkState& link,
               double symbols_loc);

// CRB of the ToA estimate, s^2.
double crb_toa(const SystemConfig& config, const LinkState& link,
               double bandwidth_loc_hz, double symbols_loc);

// Joint ToA/AoA position CRB, m^2, evaluated at the link's ToA operating
// point: c^2 t^2 crb_aoa + c^2 crb_toa.
double crb_position(const SystemConfig& config, const LinkState& link,
                    double bandwidth_loc_hz, double symbols_loc);

// 2D position from the anchor, the AoA estimate and the ToA estimate.
Point estimate_position(Point anchor, double theta_hat_rad, double toa_hat_s);

}  // namespace ilac
