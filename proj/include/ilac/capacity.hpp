#pragma once

#include "ilac/link_model.hpp"

namespace ilac {

// Post-combining SINR of the data phase when `pilot_symbols` uplink symbols
// were spent on channel estimation.
double exact_sinr(const SystemConfig& config, const LinkState& link,
                  double pilot_symbols);

// Downlink capacity with channel-estimation overhead, nats/s. Throws on a
// bandwidth outside (0, total], symbols_comm outside [1, symbols_total], or
// pilot_symbols outside [1, symbols_comm).
double capacity_exact(const SystemConfig& config, const LinkState& link,
                      double bandwidth_hz, int symbols_comm, int pilot_symbols);

// First-order lower bound of ln(1 + x) expanded around x_bar; tight at
// x == x_bar. Both arguments must be positive.
double log_lower_bound(double x, double x_bar);

// Capacity under the logarithm lower bound, nats/s. pilot_symbols is a
// positive real: the continuous relaxation extends formally past
// symbols_comm, where the airtime factor goes negative; physical callers
// keep pilot_symbols < symbols_comm.
double capacity_approx(const SystemConfig& config, const LinkState& link,
                       double bandwidth_hz, double symbols_comm,
                       double pilot_symbols);

// Stationary pilot length of capacity_approx. Continuous and unclamped;
// clamping into [1, symbols_comm - 1] is the caller's policy.
double optimal_pilot(const SystemConfig& config, const LinkState& link,
                     double symbols_comm);

// capacity_approx evaluated at its optimal pilot length, nats/s.
double optimal_capacity(const SystemConfig& config, const LinkState& link,
                        double bandwidth_hz, double symbols_comm);

// Exhaustive argmax of capacity_exact over integer pilot lengths in
// [1, symbols_comm). Smallest pilot wins ties.
int best_integer_pilot(const SystemConfig& config, const LinkState& link,
                       double bandwidth_hz, int symbols_comm);

}  // namespace ilac
