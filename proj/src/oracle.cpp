#include "ilac/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "ilac/capacity.hpp"
#include "ilac/crb.hpp"
#include "ilac/tradeoff.hpp"

namespace ilac {

namespace {

double rel_err(double actual, double expected) {
  return std::abs(actual - expected) /
         std::max(std::abs(expected), 1e-30);
}

void track(OracleReport& report, double abs_error, double rel_error) {
  report.max_abs_error = std::max(report.max_abs_error, abs_error);
  report.max_rel_error = std::max(report.max_rel_error, rel_error);
  if (rel_error > report.tolerance) ++report.violations;
}

}  // namespace

std::string format_report_line(const OracleReport& report) {
  char line[256];
  std::snprintf(line, sizeof(line),
                "check=%s samples=%ld max_abs_err=%.3e max_rel_err=%.3e "
                "violations=%ld tol=%.3e verdict=%s",
                report.check_name.c_str(), report.samples,
                report.max_abs_error, report.max_rel_error, report.violations,
                report.tolerance, report.passed ? "PASS" : "FAIL");
  return line;
}

OracleReport audit_pilot_optimum(const SystemConfig& config,
                                 const LinkState& link,
                                 const std::vector<int>& symbols_comm_samples) {
  OracleReport report;
  report.check_name = "pilot-optimum";
  report.tolerance = 1.0;  // argmax must sit within one symbol of the optimum

  for (int symbols_comm : symbols_comm_samples) {
    if (symbols_comm < 2) continue;
    ++report.samples;

    int argmax = 1;
    double best = capacity_approx(config, link, config.total_bandwidth_hz,
                                  symbols_comm, 1.0);
    for (int pilot = 2; pilot < symbols_comm; ++pilot) {
      const double value = capacity_approx(
          config, link, config.total_bandwidth_hz, symbols_comm, pilot);
      if (value > best) {
        best = value;
        argmax = pilot;
      }
    }

    const double continuous = optimal_pilot(config, link, symbols_comm);
    const double clamped =
        std::clamp(continuous, 1.0, static_cast<double>(symbols_comm - 1));
    const bool bracketed = argmax == static_cast<int>(std::floor(clamped)) ||
                           argmax == static_cast<int>(std::ceil(clamped));
    const double distance = std::abs(argmax - clamped);
    report.max_abs_error = std::max(report.max_abs_error, distance);
    report.max_rel_error = std::max(report.max_rel_error, distance);
    if (!bracketed) ++report.violations;
  }

  report.passed = report.violations == 0;
  return report;
}

OracleReport audit_inequality_eq13(int grid_points_per_axis) {
  OracleReport report;
  report.check_name = "log-bound-inequality";
  report.tolerance = 1e-12;

  const double lo = 1e-2;
  const double hi = 1e4;
  const int n = std::max(grid_points_per_axis, 2);
  const auto grid_value = [&](int i) {
    return lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  };

  for (int i = 0; i < n; ++i) {
    const double x = grid_value(i);
    for (int j = 0; j < n; ++j) {
      const double x_bar = grid_value(j);
      ++report.samples;
      const double bound = log_lower_bound(x, x_bar);
      const double truth = std::log1p(x);
      const double excess = bound - truth;  // must not exceed the slack
      report.max_abs_error = std::max(report.max_abs_error, excess);
      if (excess > report.tolerance) ++report.violations;
    }
    // Diagonal: the bound must be exact at its expansion point.
    ++report.samples;
    const double diag = std::abs(log_lower_bound(x, x) - std::log1p(x));
    report.max_abs_error = std::max(report.max_abs_error, diag);
    report.max_rel_error = std::max(report.max_rel_error, diag);
    if (diag > report.tolerance) ++report.violations;
  }

  report.passed = report.violations == 0;
  return report;
}

std::array<OracleReport, 2> audit_theorem_roundtrips(
    const SystemConfig& config, const LinkState& link, int grid_points,
    const std::optional<LinkState>& subject_link) {
  const LinkState& subject = subject_link ? *subject_link : link;
  const int n = std::max(grid_points, 2);

  OracleReport time_report;
  time_report.check_name = "theorem1-time-roundtrip";
  time_report.tolerance = 1e-9;
  const double max_loss_time = max_time_capacity_loss(config, link);
  for (int i = 0; i <= n; ++i) {
    const double loss = max_loss_time * i / n;
    const double closed_form = theorem1_crb_loss(config, subject, loss);
    const double composed =
        config.symbols_total / tau_loc_from_capacity_loss(config, link, loss);
    ++time_report.samples;
    track(time_report, std::abs(closed_form - composed),
          rel_err(closed_form, composed));
  }
  time_report.passed = time_report.violations == 0;

  OracleReport freq_report;
  freq_report.check_name = "theorem2-frequency-roundtrip";
  freq_report.tolerance = 1e-12;
  const double full_capacity =
      optimal_capacity(config, link, config.total_bandwidth_hz,
                       config.symbols_total);
  for (int i = 1; i <= n; ++i) {
    const double loss = full_capacity * i / (n + 1);
    const double closed_form = theorem2_crb_loss(config, subject, loss);
    const double composed = crb_loss_freq(
        config, link, bandwidth_from_capacity_loss(config, link, loss));
    ++freq_report.samples;
    track(freq_report, std::abs(closed_form - composed),
          rel_err(closed_form, composed));
  }
  freq_report.passed = freq_report.violations == 0;

  return {time_report, freq_report};
}

DominanceResult compare_frontier_dominance(const SystemConfig& config,
                                           const LinkState& link,
                                           int grid_points) {
  DominanceResult result;
  result.crossover_fraction = std::numeric_limits<double>::quiet_NaN();
  const int n = std::max(grid_points, 2);
  const double max_loss = max_time_capacity_loss(config, link);

  int previous_winner = 0;  // +1 frequency, -1 time, 0 tie/unset
  for (int i = 1; i <= n; ++i) {
    const double loss = max_loss * i / (n + 1);
    const double time_loss = theorem1_crb_loss(config, link, loss);
    const double freq_loss = theorem2_crb_loss(config, link, loss);

    int winner = 0;
    if (rel_err(freq_loss, time_loss) < 1e-12) {
      ++result.ties;
    } else if (freq_loss < time_loss) {
      ++result.freq_wins;
      winner = 1;
    } else {
      ++result.time_wins;
      winner = -1;
    }
    if (winner != 0 && previous_winner != 0 && winner != previous_winner &&
        std::isnan(result.crossover_fraction)) {
      result.crossover_fraction = static_cast<double>(i) / (n + 1);
    }
    if (winner != 0) previous_winner = winner;
  }
  return result;
}

OracleReport audit_frontier_dominance(const SystemConfig& config_a,
                                      const LinkState& link_a,
                                      const SystemConfig& config_b,
                                      const LinkState& link_b,
                                      int grid_points, double min_share) {
  OracleReport report;
  report.check_name = "frontier-dominance";
  report.tolerance = 1.0 - min_share;  // allowed off-expectation share

  const DominanceResult a = compare_frontier_dominance(config_a, link_a,
                                                       grid_points);
  const DominanceResult b = compare_frontier_dominance(config_b, link_b,
                                                       grid_points);
  const long n_a = a.freq_wins + a.time_wins + a.ties;
  const long n_b = b.freq_wins + b.time_wins + b.ties;
  report.samples = n_a + n_b;
  report.violations = a.time_wins + b.freq_wins;

  const double freq_share_a = static_cast<double>(a.freq_wins) / n_a;
  const double time_share_b = static_cast<double>(b.time_wins) / n_b;
  report.max_rel_error =
      std::max(1.0 - freq_share_a, 1.0 - time_share_b);
  report.max_abs_error = report.max_rel_error;
  report.passed = freq_share_a >= min_share && time_share_b >= min_share;
  return report;
}

}  // namespace ilac
