#pragma once

#include <string>

#include "ilac/link_model.hpp"
#include "ilac/tradeoff.hpp"

namespace ilac {

enum class SweepDomain { kTime, kFrequency, kBoth };

// A runnable setup: system parameters plus exactly one of an explicit UE
// distance or a localization-SNR pin (which implies the distance), plus the
// sweep and output settings.
struct Scenario {
  SystemConfig config;
  std::optional<double> distance_m;
  SweepDomain sweep_domain = SweepDomain::kBoth;
  int sweep_grid = 0;  // 0 = one point per resource element
  std::string output_dir = ".";
};

// Applies one "key = value" setting; throws ConfigError naming the key on an
// unknown key or an unparsable value. Shared by the file loader and --set.
void apply_setting(Scenario& scenario, const std::string& key,
                   const std::string& value);

// Loads a flat key-value scenario file ('#' starts a comment).
Scenario load_scenario_file(const std::string& path);

// Validates the config and the exactly-one-of distance/gamma-override rule.
void finalize_scenario(const Scenario& scenario);

// Explicit distance, or the one implied by the gamma override.
double scenario_distance(const Scenario& scenario);

LinkState scenario_link(const Scenario& scenario);

}  // namespace ilac
