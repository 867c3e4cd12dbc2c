#include "ilac/tradeoff.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ilac/capacity.hpp"
#include "ilac/crb.hpp"

namespace ilac {

namespace {

// N_T epsilon ln(alpha/(1+delta)) / alpha — the squared sqrt term shared by
// the time-domain closed forms.
double pilot_term_sq(const SystemConfig& config, const LinkState& link) {
  return config.n_antennas * link.epsilon * link.effective_log_snr /
         link.alpha;
}

// tau_T ln(alpha/(1+delta)) - 2 sqrt(tau_T N_T eps ln(..)/alpha) + N_T eps/alpha
double freq_loss_bracket(const SystemConfig& config, const LinkState& link) {
  const double log_snr = link.effective_log_snr;
  const double tau_total = config.symbols_total;
  return tau_total * log_snr -
         2.0 * std::sqrt(tau_total * config.n_antennas * link.epsilon *
                         log_snr / link.alpha) +
         config.n_antennas * link.epsilon / link.alpha;
}

}  // namespace

TimeCapacityLoss capacity_loss_time(const SystemConfig& config,
                                    const LinkState& link,
                                    double symbols_loc) {
  const double tau_total = config.symbols_total;
  if (symbols_loc < 0.0 || symbols_loc >= tau_total) {
    throw std::domain_error(
        "capacity_loss_time: symbols_loc must lie in [0, symbols_total)");
  }
  const double log_snr = link.effective_log_snr;
  const double paper =
      config.total_bandwidth_hz / tau_total *
      (symbols_loc * log_snr -
       2.0 * std::sqrt(symbols_loc * pilot_term_sq(config, link)));
  const double full =
      optimal_capacity(config, link, config.total_bandwidth_hz, tau_total);
  const double remaining =
      symbols_loc == 0.0
          ? full
          : optimal_capacity(config, link, config.total_bandwidth_hz,
                             tau_total - symbols_loc);
  return {paper, full - remaining, paper < 0.0};
}

double max_time_capacity_loss(const SystemConfig& config,
                              const LinkState& link) {
  const double tau_total = config.symbols_total;
  const double log_snr = link.effective_log_snr;
  return config.total_bandwidth_hz / tau_total *
         (tau_total * log_snr -
          2.0 * std::sqrt(tau_total * pilot_term_sq(config, link)));
}

double tau_loc_from_capacity_loss(const SystemConfig& config,
                                  const LinkState& link,
                                  double capacity_loss) {
  if (capacity_loss < 0.0) {
    throw std::domain_error(
        "tau_loc_from_capacity_loss: capacity loss must be non-negative");
  }
  const double log_snr = link.effective_log_snr;
  const double k_sq = pilot_term_sq(config, link);
  const double scaled_loss = capacity_loss * config.symbols_total * log_snr /
                             config.total_bandwidth_hz;
  const double root = std::sqrt(k_sq) + std::sqrt(k_sq + scaled_loss);
  return root * root / (log_snr * log_snr);
}

double crb_loss_time(const SystemConfig& config, double symbols_loc) {
  if (symbols_loc < 0.0) {
    throw std::domain_error("crb_loss_time: symbols_loc must be non-negative");
  }
  if (symbols_loc == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return config.symbols_total / symbols_loc;
}

double theorem1_crb_loss(const SystemConfig& config, const LinkState& link,
                         double capacity_loss) {
  if (capacity_loss < 0.0) {
    throw std::domain_error(
        "theorem1_crb_loss: capacity loss must be non-negative");
  }
  const double log_snr = link.effective_log_snr;
  const double k_sq = pilot_term_sq(config, link);
  const double scaled_loss = capacity_loss * config.symbols_total * log_snr /
                             config.total_bandwidth_hz;
  const double ratio =
      log_snr / (std::sqrt(k_sq) + std::sqrt(k_sq + scaled_loss));
  return config.symbols_total * ratio * ratio;
}

double capacity_loss_freq(const SystemConfig& config, const LinkState& link,
                          double bandwidth_loc_hz) {
  const double total = config.total_bandwidth_hz;
  if (bandwidth_loc_hz < 0.0 || bandwidth_loc_hz >= total) {
    throw std::domain_error(
        "capacity_loss_freq: bandwidth_loc must lie in [0, total_bandwidth)");
  }
  const double bandwidth_comm = total - bandwidth_loc_hz;
  return (total - bandwidth_comm) / config.symbols_total *
         freq_loss_bracket(config, link);
}

double bandwidth_from_capacity_loss(const SystemConfig& config,
                                    const LinkState& link,
                                    double capacity_loss) {
  if (capacity_loss < 0.0) {
    throw std::domain_error(
        "bandwidth_from_capacity_loss: capacity loss must be non-negative");
  }
  const double bandwidth = capacity_loss * config.symbols_total /
                           freq_loss_bracket(config, link);
  if (bandwidth >= config.total_bandwidth_hz) {
    throw std::domain_error(
        "bandwidth_from_capacity_loss: infeasible loss, exceeds the total "
        "capacity");
  }
  return bandwidth;
}

double crb_loss_freq(const SystemConfig& config, const LinkState& link,
                     double bandwidth_loc_hz) {
  if (bandwidth_loc_hz < 0.0 ||
      bandwidth_loc_hz > config.total_bandwidth_hz) {
    throw std::domain_error(
        "crb_loss_freq: bandwidth_loc must lie in [0, total_bandwidth]");
  }
  if (bandwidth_loc_hz == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  const double tau_total = config.symbols_total;
  return crb_position(config, link, bandwidth_loc_hz, tau_total) /
         crb_position(config, link, config.total_bandwidth_hz, tau_total);
}

double eq11_crb_loss_freq(const SystemConfig& config, const LinkState& link,
                          double bandwidth_loc_hz) {
  if (!(bandwidth_loc_hz > 0.0)) {
    throw std::domain_error(
        "eq11_crb_loss_freq: bandwidth_loc must be positive");
  }
  const double wavelength = config.wavelength_m();
  const double spacing = config.spacing_m();
  const double cos_theta = std::cos(config.theta_rad);
  const double n = config.n_antennas;
  const double toa = link.toa_s;
  const double aoa_term =
      3.0 * toa * toa * wavelength * wavelength /
      (spacing * spacing * cos_theta * cos_theta * (n - 1.0) * (2.0 * n - 1.0));
  const auto toa_term = [&](double bandwidth) {
    return 12.0 /
           (2.0 * bandwidth * bandwidth * (1.0 + config.waveform_coeff));
  };
  return (aoa_term + toa_term(bandwidth_loc_hz)) /
         (aoa_term + toa_term(config.total_bandwidth_hz));
}

double theorem2_crb_loss(const SystemConfig& config, const LinkState& link,
                         double capacity_loss) {
  return crb_loss_freq(config, link,
                       bandwidth_from_capacity_loss(config, link,
                                                    capacity_loss));
}

namespace {

// Granular split indices: all of 1..max_index, or `requested` of them evenly
// spaced (integer arithmetic, strictly increasing, endpoints included).
std::vector<int> sweep_indices(int max_index, int requested) {
  if (max_index < 1) {
    throw std::domain_error("sweep_frontier: no allocatable resource splits");
  }
  std::vector<int> indices;
  if (requested <= 0 || requested >= max_index) {
    indices.reserve(max_index);
    for (int k = 1; k <= max_index; ++k) indices.push_back(k);
    return indices;
  }
  if (requested < 2) {
    throw std::domain_error("sweep_frontier: grid needs at least 2 points");
  }
  indices.reserve(requested);
  for (int i = 0; i < requested; ++i) {
    indices.push_back(1 + static_cast<int>(static_cast<long>(i) *
                                           (max_index - 1) / (requested - 1)));
  }
  return indices;
}

}  // namespace

SweepResult sweep_frontier(const SystemConfig& config, const LinkState& link,
                           AllocationDomain domain, int grid_points,
                           PilotPolicy policy) {
  SweepResult result;
  result.domain = domain;
  result.pilot_policy = policy;

  const double total_bw = config.total_bandwidth_hz;
  const int tau_total = config.symbols_total;

  const auto block_capacity = [&](double bandwidth, int symbols_comm) {
    if (policy == PilotPolicy::kContinuousOptimal) {
      return optimal_capacity(config, link, bandwidth, symbols_comm);
    }
    return capacity_exact(config, link, bandwidth, symbols_comm,
                          best_integer_pilot(config, link, bandwidth,
                                             symbols_comm));
  };

  result.full_capacity_nats = block_capacity(total_bw, tau_total);
  result.full_crb_m2 = crb_position(config, link, total_bw, tau_total);

  if (domain == AllocationDomain::kTime) {
    // tau_loc up to symbols_total - 2 keeps room for pilot plus data.
    const auto indices = sweep_indices(tau_total - 2, grid_points);
    result.points.reserve(indices.size());
    for (int tau_loc : indices) {
      const auto loss = capacity_loss_time(config, link, tau_loc);
      TradeoffPoint point;
      point.split = {domain, static_cast<double>(tau_loc), total_bw, policy};
      point.alloc_fraction = static_cast<double>(tau_loc) / tau_total;
      point.capacity_nats = block_capacity(total_bw, tau_total - tau_loc);
      point.crb_m2 = crb_position(config, link, total_bw, tau_loc);
      point.capacity_loss_nats = loss.paper_form;
      point.crb_loss = crb_loss_time(config, tau_loc);
      point.warn_negative_loss = loss.negative_paper_form;
      result.points.push_back(point);
    }
    return result;
  }

  const double subcarrier = config.subcarrier_bandwidth_hz;
  const auto indices = sweep_indices(config.subcarrier_count() - 1, grid_points);
  result.points.reserve(indices.size());
  for (int k : indices) {
    const double bandwidth_loc = k * subcarrier;
    TradeoffPoint point;
    point.split = {domain, static_cast<double>(tau_total), bandwidth_loc,
                   policy};
    point.alloc_fraction = bandwidth_loc / total_bw;
    point.capacity_nats = block_capacity(total_bw - bandwidth_loc, tau_total);
    point.crb_m2 = crb_position(config, link, bandwidth_loc, tau_total);
    point.capacity_loss_nats = capacity_loss_freq(config, link, bandwidth_loc);
    point.crb_loss = crb_loss_freq(config, link, bandwidth_loc);
    point.warn_negative_loss = false;
    result.points.push_back(point);
  }
  return result;
}

}  // namespace ilac
