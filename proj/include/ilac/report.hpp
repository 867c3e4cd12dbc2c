#pragma once

#include <string>

#include "ilac/tradeoff.hpp"

namespace ilac {

inline constexpr const char* kFrontierCsvHeader =
    "domain,alloc_fraction,tau_L,B_L_hz,capacity_nats,capacity_bits,crb_m2,"
    "capacity_loss_nats,crb_loss_ratio,warn_negative_loss";

// Fixed-width decimal form; identical bytes for identical doubles, so
// repeated runs of the same sweep serialize identically.
std::string format_double(double value);

// CSV body for one sweep: header plus one row per point, ordered by
// ascending allocation fraction.
std::string frontier_csv(const SweepResult& sweep);

// Writes the CSV; throws ConfigError echoing the path on I/O failure.
void write_frontier_csv(const SweepResult& sweep, const std::string& path);

}  // namespace ilac
