#include "ilac/crb.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ilac {

namespace {
constexpr double kPi = std::numbers::pi;
}

double crb_aoa(const SystemConfig& config, const LinkState& link,
               double symbols_loc) {
  if (!(symbols_loc > 0.0)) {
    throw std::domain_error("crb_aoa: symbols_loc must be positive");
  }
  const double cos_theta = std::cos(config.theta_rad);
  const double cos_sq = cos_theta * cos_theta;
  if (!(cos_sq > 0.0)) {
    throw std::domain_error("crb_aoa: singular geometry, theta = +/- pi/2");
  }
  const double wavelength = config.wavelength_m();
  const double spacing = config.spacing_m();
  const double n = config.n_antennas;
  return 3.0 * wavelength * wavelength /
         (4.0 * kPi * kPi * spacing * spacing * link.gamma * cos_sq * n *
          (n - 1.0) * (2.0 * n - 1.0) * symbols_loc);
}

double crb_toa(const SystemConfig& config, const LinkState& link,
               double bandwidth_loc_hz, double symbols_loc) {
  if (!(bandwidth_loc_hz > 0.0)) {
    throw std::domain_error("crb_toa: bandwidth_loc must be positive");
  }
  if (!(symbols_loc > 0.0)) {
    throw std::domain_error("crb_toa: symbols_loc must be positive");
  }
  return 3.0 /
         (8.0 * kPi * kPi * bandwidth_loc_hz * bandwidth_loc_hz *
          (1.0 + config.waveform_coeff) * link.gamma * config.n_antennas *
          symbols_loc);
}

double crb_position(const SystemConfig& config, const LinkState& link,
                    double bandwidth_loc_hz, double symbols_loc) {
  const double c_sq = kSpeedOfLight * kSpeedOfLight;
  const double toa = link.toa_s;
  return c_sq * toa * toa * crb_aoa(config, link, symbols_loc) +
         c_sq * crb_toa(config, link, bandwidth_loc_hz, symbols_loc);
}

Point estimate_position(Point anchor, double theta_hat_rad, double toa_hat_s) {
  if (toa_hat_s < 0.0) {
    throw std::domain_error("estimate_position: negative time of arrival");
  }
  const double range = kSpeedOfLight * toa_hat_s;
  return {anchor.x_m + std::cos(theta_hat_rad) * range,
          anchor.y_m + std::sin(theta_hat_rad) * range};
}

}  // namespace ilac
