#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ilac/link_model.hpp"

namespace ilac {

// Outcome of one brute-force audit. Relative errors use
// max(|expected|, 1e-30) in the denominator.
struct OracleReport {
  std::string check_name;
  long samples = 0;
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;
  long violations = 0;
  double tolerance = 0.0;
  bool passed = false;
};

// One structured text line per check: name, samples, errors, verdict.
std::string format_report_line(const OracleReport& report);

// Exhaustively sweeps integer pilots for each communication block length and
// checks that the argmax of capacity_approx brackets the continuous optimum
// (clamped into the feasible integer range).
OracleReport audit_pilot_optimum(const SystemConfig& config,
                                 const LinkState& link,
                                 const std::vector<int>& symbols_comm_samples =
                                     {2, 20, 200});

// Log-spaced grid audit of the logarithm lower bound: no violations above
// ln(1 + x) allowed at 1e-12 slack, equality on the diagonal.
OracleReport audit_inequality_eq13(int grid_points_per_axis = 100);

// Asserts the two closed-form composition identities over a capacity-loss
// grid: time-domain at 1e-9 relative, frequency-domain at 1e-12 relative.
// subject_link, when set, feeds only the closed forms under test; the fault
// hook of the validate command uses it to inject a corrupted alpha.
std::array<OracleReport, 2> audit_theorem_roundtrips(
    const SystemConfig& config, const LinkState& link, int grid_points = 100,
    const std::optional<LinkState>& subject_link = std::nullopt);

// Per-point comparison of the time and frequency frontiers on a shared
// capacity-loss grid.
struct DominanceResult {
  long freq_wins = 0;
  long time_wins = 0;
  long ties = 0;
  // Shared-loss fraction where the winner first flips; NaN when one domain
  // dominates the whole grid.
  double crossover_fraction = 0.0;
};

DominanceResult compare_frontier_dominance(const SystemConfig& config,
                                           const LinkState& link,
                                           int grid_points = 100);

// Checks the expected dominance pattern of two scenarios: config_a is
// expected frequency-dominant and config_b time-dominant, each on at least
// min_share of the shared grid.
OracleReport audit_frontier_dominance(const SystemConfig& config_a,
                                      const LinkState& link_a,
                                      const SystemConfig& config_b,
                                      const LinkState& link_b,
                                      int grid_points = 100,
                                      double min_share = 0.9);

}  // namespace ilac
