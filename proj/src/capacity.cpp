#include "ilac/capacity.hpp"

#include <cmath>
#include <stdexcept>

namespace ilac {

namespace {

void check_bandwidth(const SystemConfig& config, double bandwidth_hz) {
  if (!(bandwidth_hz > 0.0) || bandwidth_hz > config.total_bandwidth_hz) {
    throw std::domain_error(
        "capacity: bandwidth must lie in (0, total_bandwidth_hz]");
  }
}

}  // namespace

double exact_sinr(const SystemConfig& config, const LinkState& link,
                  double pilot_symbols) {
  const double pilot_energy = pilot_symbols * link.rho_ul * link.beta;
  const double estimate_quality =
      pilot_energy * link.beta / (1.0 + pilot_energy);
  return config.n_antennas * link.rho_dl * estimate_quality /
         (link.rho_dl * link.beta);
}

double capacity_exact(const SystemConfig& config, const LinkState& link,
                      double bandwidth_hz, int symbols_comm,
                      int pilot_symbols) {
  check_bandwidth(config, bandwidth_hz);
  if (symbols_comm < 1 || symbols_comm > config.symbols_total) {
    throw std::domain_error(
        "capacity_exact: symbols_comm must lie in [1, symbols_total]");
  }
  if (pilot_symbols < 1) {
    throw std::domain_error(
        "capacity_exact: the pilot needs at least one symbol");
  }
  if (pilot_symbols >= symbols_comm) {
    throw std::domain_error(
        "capacity_exact: zero or negative data airtime (pilot >= symbols_comm)");
  }
  const double airtime =
      static_cast<double>(symbols_comm - pilot_symbols) / config.symbols_total;
  return bandwidth_hz * airtime *
         std::log1p(exact_sinr(config, link, pilot_symbols));
}

double log_lower_bound(double x, double x_bar) {
  if (!(x > 0.0) || !(x_bar > 0.0)) {
    throw std::domain_error("log_lower_bound: x and x_bar must be positive");
  }
  return std::log1p(x_bar) + x_bar / (1.0 + x_bar) * (1.0 - x_bar / x);
}

double capacity_approx(const SystemConfig& config, const LinkState& link,
                       double bandwidth_hz, double symbols_comm,
                       double pilot_symbols) {
  check_bandwidth(config, bandwidth_hz);
  if (!(symbols_comm > 0.0) || symbols_comm > config.symbols_total) {
    throw std::domain_error(
        "capacity_approx: symbols_comm must lie in (0, symbols_total]");
  }
  if (!(pilot_symbols > 0.0)) {
    throw std::domain_error("capacity_approx: pilot_symbols must be positive");
  }
  const double log_snr = link.effective_log_snr;
  const double estimation_penalty =
      config.n_antennas * link.epsilon / link.alpha;
  return bandwidth_hz / config.symbols_total *
         (symbols_comm * log_snr -
          symbols_comm * estimation_penalty / pilot_symbols -
          pilot_symbols * log_snr + estimation_penalty);
}

double optimal_pilot(const SystemConfig& config, const LinkState& link,
                     double symbols_comm) {
  if (!(symbols_comm > 0.0)) {
    throw std::domain_error("optimal_pilot: symbols_comm must be positive");
  }
  return std::sqrt(symbols_comm * config.n_antennas * link.epsilon /
                   (link.alpha * link.effective_log_snr));
}

double optimal_capacity(const SystemConfig& config, const LinkState& link,
                        double bandwidth_hz, double symbols_comm) {
  return capacity_approx(config, link, bandwidth_hz, symbols_comm,
                         optimal_pilot(config, link, symbols_comm));
}

int best_integer_pilot(const SystemConfig& config, const LinkState& link,
                       double bandwidth_hz, int symbols_comm) {
  if (symbols_comm < 2) {
    throw std::domain_error(
        "best_integer_pilot: symbols_comm must be at least 2");
  }
  int best = 1;
  double best_value = capacity_exact(config, link, bandwidth_hz, symbols_comm, 1);
  for (int pilot = 2; pilot < symbols_comm; ++pilot) {
    const double value =
        capacity_exact(config, link, bandwidth_hz, symbols_comm, pilot);
    if (value > best_value) {
      best_value = value;
      best = pilot;
    }
  }
  return best;
}

}  // namespace ilac
