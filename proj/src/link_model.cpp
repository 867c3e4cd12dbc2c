#include "ilac/link_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ilac {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;
}  // namespace

double snr_db_to_linear(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

double linear_to_snr_db(double snr_linear) {
  if (!(snr_linear > 0.0)) {
    throw std::domain_error("linear_to_snr_db: value must be positive");
  }
  return 10.0 * std::log10(snr_linear);
}

double dbm_to_milliwatt(double dbm) { return std::pow(10.0, dbm / 10.0); }

int SystemConfig::subcarrier_count() const {
  return static_cast<int>(
      std::llround(total_bandwidth_hz / subcarrier_bandwidth_hz));
}

void validate(const SystemConfig& config) {
  if (!(config.carrier_freq_hz > 0.0)) {
    throw ConfigError("carrier_freq_hz must be positive");
  }
  if (!(config.total_bandwidth_hz > 0.0)) {
    throw ConfigError("total_bandwidth_hz must be positive");
  }
  if (!(config.subcarrier_bandwidth_hz > 0.0)) {
    throw ConfigError("subcarrier_bandwidth_hz must be positive");
  }
  if (config.subcarrier_count() < 2) {
    throw ConfigError(
        "total_bandwidth_hz must span at least two subcarriers of "
        "subcarrier_bandwidth_hz");
  }
  if (config.symbols_total < 2) {
    throw ConfigError("symbols_total must be at least 2");
  }
  if (config.n_antennas < 2) {
    throw ConfigError("n_antennas must be at least 2");
  }
  if (config.antenna_spacing_m && !(*config.antenna_spacing_m > 0.0)) {
    throw ConfigError("antenna_spacing_m must be positive");
  }
  if (!(std::abs(config.theta_rad) < kHalfPi)) {
    throw ConfigError("theta must satisfy |theta| < pi/2");
  }
  if (!(config.gnb_gain() > 0.0)) {
    throw ConfigError("gain_gnb must be positive");
  }
  if (!(config.gain_ue > 0.0)) {
    throw ConfigError("gain_ue must be positive");
  }
  if (!(config.waveform_coeff >= 0.0)) {
    throw ConfigError("waveform_coeff must be non-negative");
  }
}

double free_space_beta(const SystemConfig& config, double distance_m) {
  if (!(distance_m > 0.0)) {
    throw std::domain_error("free_space_beta: distance must be positive");
  }
  if (!(config.carrier_freq_hz > 0.0)) {
    throw std::domain_error("free_space_beta: carrier frequency must be positive");
  }
  const double ratio = config.wavelength_m() / (4.0 * kPi * distance_m);
  return ratio * ratio;
}

LinkState build_link(const SystemConfig& config, double distance_m) {
  validate(config);

  LinkState link;
  link.distance_m = distance_m;
  link.beta = free_space_beta(config, distance_m);
  if (link.beta > 1.0) {
    throw ConfigError(
        "build_link: distance is inside the radiating near field (beta > 1)");
  }

  const double noise_mw = dbm_to_milliwatt(config.noise_power_dbm);
  const double gains = config.gnb_gain() * config.gain_ue;
  link.rho_ul = dbm_to_milliwatt(config.p_ue_dbm) * gains / noise_mw;
  link.rho_dl = dbm_to_milliwatt(config.p_gnb_dbm) * gains / noise_mw;

  link.gamma = config.gamma_override_db
                   ? snr_db_to_linear(*config.gamma_override_db)
                   : link.rho_dl * link.beta;
  link.toa_s = distance_m / kSpeedOfLight;
  link.delta = link.rho_ul * link.beta;
  link.alpha = 1.0 + (config.n_antennas + 1) * link.rho_dl * link.beta;
  link.epsilon = config.epsilon_mode == EpsilonMode::kDlOverUl
                     ? link.rho_dl / link.rho_ul
                     : 1.0;

  if (!(link.alpha > 1.0 + link.delta)) {
    throw ConfigError(
        "build_link: non-positive effective log-SNR (alpha <= 1 + delta); "
        "the uplink power overwhelms the downlink array budget");
  }
  link.effective_log_snr = std::log(link.alpha / (1.0 + link.delta));
  return link;
}

double distance_for_gamma(const SystemConfig& config, double gamma_linear) {
  if (!(gamma_linear > 0.0)) {
    throw std::domain_error("distance_for_gamma: gamma must be positive");
  }
  const double element_budget = dbm_to_milliwatt(config.p_gnb_dbm) *
                                config.gain_ue /
                                dbm_to_milliwatt(config.noise_power_dbm);
  const double beta = gamma_linear / element_budget;
  return config.wavelength_m() / (4.0 * kPi * std::sqrt(beta));
}

}  // namespace ilac
