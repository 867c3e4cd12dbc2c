#pragma once

#include <vector>

#include "ilac/link_model.hpp"

namespace ilac {

enum class AllocationDomain { kTime, kFrequency };

// Pilot length used when evaluating the capacity of a split:
// kContinuousOptimal substitutes the unclamped stationary pilot (the regime
// of the closed forms); kIntegerArgmax sweeps integer pilots exhaustively.
enum class PilotPolicy { kContinuousOptimal, kIntegerArgmax };

// Capacity lost by giving symbols_loc symbols to localization, both routes:
// paper_form is the closed form with the sqrt(symbols_loc) cross term;
// exact_form is the direct difference of optimal capacities. paper_form is a
// lower bound of exact_form and can go negative for tiny allocations at low
// SNR; it is flagged, never clamped.
struct TimeCapacityLoss {
  double paper_form = 0.0;  // nats/s
  double exact_form = 0.0;  // nats/s
  bool negative_paper_form = false;
};

TimeCapacityLoss capacity_loss_time(const SystemConfig& config,
                                    const LinkState& link, double symbols_loc);

// Upper end of the invertible time-domain capacity-loss range: the
// paper_form loss at full allocation (symbols_loc == symbols_total).
double max_time_capacity_loss(const SystemConfig& config,
                              const LinkState& link);

// Inverts the paper_form capacity loss back to the symbol allocation
// (the larger quadratic root). capacity_loss must be non-negative.
double tau_loc_from_capacity_loss(const SystemConfig& config,
                                  const LinkState& link, double capacity_loss);

// symbols_total / symbols_loc; +infinity at symbols_loc == 0.
double crb_loss_time(const SystemConfig& config, double symbols_loc);

// Closed-form time-domain CRB loss as a function of capacity loss.
double theorem1_crb_loss(const SystemConfig& config, const LinkState& link,
                         double capacity_loss);

// Capacity lost by giving bandwidth_loc_hz to localization, nats/s. Exact:
// capacity is linear in bandwidth, so this equals the direct difference of
// optimal capacities.
double capacity_loss_freq(const SystemConfig& config, const LinkState& link,
                          double bandwidth_loc_hz);

// Inverts capacity_loss_freq. Throws when the loss exceeds the total
// capacity (no feasible bandwidth split).
double bandwidth_from_capacity_loss(const SystemConfig& config,
                                    const LinkState& link,
                                    double capacity_loss);

// Frequency-domain CRB loss, computed definitionally as the ratio
// crb_position(bandwidth_loc, symbols_total) / crb_position(total bandwidth,
// symbols_total). +infinity at bandwidth_loc == 0.
double crb_loss_freq(const SystemConfig& config, const LinkState& link,
                     double bandwidth_loc_hz);

// The printed closed-form variant of the frequency-domain CRB loss. Its
// constants disagree with the definitional ratio; exposed for comparison
// reporting only, never used by the sweeps or the inversions.
double eq11_crb_loss_freq(const SystemConfig& config, const LinkState& link,
                          double bandwidth_loc_hz);

// Frequency-domain CRB loss as a function of capacity loss:
// crb_loss_freq after bandwidth_from_capacity_loss.
double theorem2_crb_loss(const SystemConfig& config, const LinkState& link,
                         double capacity_loss);

// One resource split: symbols_loc applies in time mode (communication keeps
// symbols_total - symbols_loc), bandwidth_loc_hz in frequency mode
// (communication keeps total - bandwidth_loc_hz).
struct ResourceSplit {
  AllocationDomain domain = AllocationDomain::kTime;
  double symbols_loc = 0.0;
  double bandwidth_loc_hz = 0.0;
  PilotPolicy pilot_policy = PilotPolicy::kContinuousOptimal;
};

struct TradeoffPoint {
  ResourceSplit split;
  double alloc_fraction = 0.0;      // share of the split resource
  double capacity_nats = 0.0;       // communication block capacity, nats/s
  double crb_m2 = 0.0;              // localization block position CRB
  double capacity_loss_nats = 0.0;  // paper_form loss for the split
  double crb_loss = 0.0;            // CRB inflation vs full allocation
  bool warn_negative_loss = false;
};

struct SweepResult {
  AllocationDomain domain = AllocationDomain::kTime;
  PilotPolicy pilot_policy = PilotPolicy::kContinuousOptimal;
  double full_capacity_nats = 0.0;  // all resources to communication
  double full_crb_m2 = 0.0;         // all resources to localization
  std::vector<TradeoffPoint> points;
};

// Sweeps the allocation over resource-element granular splits (1 symbol in
// time mode, one subcarrier in frequency mode), both boundaries excluded.
// grid_points == 0 takes every granular split; otherwise grid_points >= 2
// splits evenly spaced over the granular index range. Points are ordered by
// ascending allocation fraction.
SweepResult sweep_frontier(const SystemConfig& config, const LinkState& link,
                           AllocationDomain domain, int grid_points = 0,
                           PilotPolicy policy = PilotPolicy::kContinuousOptimal);

}  // namespace ilac
