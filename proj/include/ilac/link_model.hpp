#pragma once

#include <optional>

#include "ilac/error.hpp"

namespace ilac {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// How the ratio of nominal SNRs that enters the pilot-overhead terms is
// formed. kLiteralOne fixes it to 1; kDlOverUl uses rho_dl / rho_ul. With
// equal transmit powers the two coincide.
enum class EpsilonMode { kLiteralOne, kDlOverUl };

// Physical and radio parameters of one ILAC cell. Angles are radians, powers
// dBm, antenna gains linear; everything else SI units. The scenario file
// layer converts degrees/dB at the boundary; internal math is all linear.
struct SystemConfig {
  double carrier_freq_hz = 2.6e9;
  double total_bandwidth_hz = 20e6;
  double subcarrier_bandwidth_hz = 180e3;
  int symbols_total = 200;  // symbols per coherence interval
  int n_antennas = 8;       // ULA size at the gNB
  std::optional<double> antenna_spacing_m;  // default: half wavelength
  double theta_rad = 0.0;   // UE angle relative to the ULA boresight
  double p_gnb_dbm = 13.0;
  double p_ue_dbm = 13.0;
  std::optional<double> gain_gnb;  // linear, default: n_antennas
  double gain_ue = 1.0;            // linear
  double noise_power_dbm = -101.0;
  double waveform_coeff = 1.0;  // spectral shape factor of the positioning signal
  EpsilonMode epsilon_mode = EpsilonMode::kLiteralOne;
  double anchor_x_m = 0.0;
  double anchor_y_m = 0.0;
  std::optional<double> gamma_override_db;  // pins the localization SNR directly

  double wavelength_m() const { return kSpeedOfLight / carrier_freq_hz; }
  double spacing_m() const {
    return antenna_spacing_m ? *antenna_spacing_m : 0.5 * wavelength_m();
  }
  double gnb_gain() const {
    return gain_gnb ? *gain_gnb : static_cast<double>(n_antennas);
  }
  // Number of allocatable resource elements across the band (rounded).
  int subcarrier_count() const;
};

// Throws ConfigError naming the offending field if any invariant is violated.
void validate(const SystemConfig& config);

// Derived per-link quantities consumed by every closed form downstream.
struct LinkState {
  double distance_m = 0.0;
  double beta = 0.0;     // large-scale fading coefficient, linear, in (0, 1]
  double rho_ul = 0.0;   // nominal uplink SNR, linear
  double rho_dl = 0.0;   // nominal downlink SNR, linear
  double gamma = 0.0;    // localization SNR, linear
  double toa_s = 0.0;    // one-way time of arrival
  double alpha = 0.0;    // 1 + (N_T + 1) rho_dl beta
  double delta = 0.0;    // rho_ul beta
  double epsilon = 0.0;  // see EpsilonMode
  double effective_log_snr = 0.0;  // ln(alpha / (1 + delta)), always > 0
};

double snr_db_to_linear(double snr_db);
double linear_to_snr_db(double snr_linear);
double dbm_to_milliwatt(double dbm);

// Free-space path attenuation (wavelength / 4 pi d)^2.
double free_space_beta(const SystemConfig& config, double distance_m);

// Builds the full link state for a UE at the given distance. gamma defaults
// to rho_dl * beta; a gamma_override_db in the config wins regardless of
// distance. Throws ConfigError when the effective log-SNR is non-positive.
LinkState build_link(const SystemConfig& config, double distance_m);

// Distance at which the free-space link produces the given localization SNR.
// The inversion uses the per-element downlink budget: the array gain enters
// the CRB formulas explicitly through the antenna-count factors, not through
// gamma, so it is excluded here.
double distance_for_gamma(const SystemConfig& config, double gamma_linear);

}  // namespace ilac
