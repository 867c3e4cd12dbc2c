#pragma once

#include <cmath>

#include "ilac/link_model.hpp"

namespace ilac_test {

inline double rel_err(double actual, double expected) {
  return std::abs(actual - expected) / std::max(std::abs(expected), 1e-30);
}

// Reference setup pinned to a localization SNR; the distance is the one the
// per-element budget implies for that SNR.
inline ilac::SystemConfig snr_config(int n_antennas, double gamma_db) {
  ilac::SystemConfig config;
  config.n_antennas = n_antennas;
  config.gamma_override_db = gamma_db;
  return config;
}

inline ilac::LinkState snr_link(const ilac::SystemConfig& config) {
  return ilac::build_link(
      config, ilac::distance_for_gamma(
                  config, ilac::snr_db_to_linear(*config.gamma_override_db)));
}

}  // namespace ilac_test
