#include "ilac/scenario.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <string>

namespace ilac {

namespace {

std::string trim(const std::string& text) {
  size_t begin = 0;
  size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  return text.substr(begin, end - begin);
}

double parse_double(const std::string& key, const std::string& value) {
  const std::string body = trim(value);
  const char* begin = body.c_str();
  char* end = nullptr;
  const double parsed = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(parsed)) {
    throw ConfigError("invalid numeric value for key '" + key + "': " + value);
  }
  return parsed;
}

int parse_int(const std::string& key, const std::string& value) {
  const double parsed = parse_double(key, value);
  const double rounded = std::round(parsed);
  if (parsed != rounded) {
    throw ConfigError("key '" + key + "' requires an integer, got: " + value);
  }
  return static_cast<int>(rounded);
}

}  // namespace

void apply_setting(Scenario& scenario, const std::string& raw_key,
                   const std::string& raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw_value);
  SystemConfig& config = scenario.config;

  if (key == "carrier_freq_hz") {
    config.carrier_freq_hz = parse_double(key, value);
  } else if (key == "total_bandwidth_hz") {
    config.total_bandwidth_hz = parse_double(key, value);
  } else if (key == "subcarrier_bandwidth_hz") {
    config.subcarrier_bandwidth_hz = parse_double(key, value);
  } else if (key == "symbols_total") {
    config.symbols_total = parse_int(key, value);
  } else if (key == "n_antennas") {
    config.n_antennas = parse_int(key, value);
  } else if (key == "antenna_spacing_m") {
    config.antenna_spacing_m = parse_double(key, value);
  } else if (key == "theta_deg") {
    config.theta_rad = parse_double(key, value) * std::numbers::pi / 180.0;
  } else if (key == "p_gnb_dbm") {
    config.p_gnb_dbm = parse_double(key, value);
  } else if (key == "p_ue_dbm") {
    config.p_ue_dbm = parse_double(key, value);
  } else if (key == "gain_gnb") {
    config.gain_gnb = parse_double(key, value);
  } else if (key == "gain_ue") {
    config.gain_ue = parse_double(key, value);
  } else if (key == "noise_power_dbm") {
    config.noise_power_dbm = parse_double(key, value);
  } else if (key == "waveform_coeff") {
    config.waveform_coeff = parse_double(key, value);
  } else if (key == "epsilon_mode") {
    if (value == "literal_one") {
      config.epsilon_mode = EpsilonMode::kLiteralOne;
    } else if (value == "dl_over_ul") {
      config.epsilon_mode = EpsilonMode::kDlOverUl;
    } else {
      throw ConfigError(
          "epsilon_mode must be 'literal_one' or 'dl_over_ul', got: " + value);
    }
  } else if (key == "anchor_x_m") {
    config.anchor_x_m = parse_double(key, value);
  } else if (key == "anchor_y_m") {
    config.anchor_y_m = parse_double(key, value);
  } else if (key == "distance_m") {
    scenario.distance_m = parse_double(key, value);
  } else if (key == "gamma_override_db") {
    config.gamma_override_db = parse_double(key, value);
  } else if (key == "sweep_domain") {
    if (value == "time") {
      scenario.sweep_domain = SweepDomain::kTime;
    } else if (value == "frequency") {
      scenario.sweep_domain = SweepDomain::kFrequency;
    } else if (value == "both") {
      scenario.sweep_domain = SweepDomain::kBoth;
    } else {
      throw ConfigError(
          "sweep_domain must be 'time', 'frequency' or 'both', got: " + value);
    }
  } else if (key == "sweep_grid") {
    scenario.sweep_grid = parse_int(key, value);
  } else if (key == "output_dir") {
    scenario.output_dir = value;
  } else {
    throw ConfigError("unknown configuration key: '" + key + "'");
  }
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream input(path);
  if (!input) {
    throw ConfigError("cannot open scenario file: " + path);
  }

  Scenario scenario;
  std::string line;
  int line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    const size_t comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    const std::string body = trim(line);
    if (body.empty()) continue;

    const size_t equals = body.find('=');
    if (equals == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(line_number) +
                        ": expected 'key = value'");
    }
    apply_setting(scenario, body.substr(0, equals), body.substr(equals + 1));
  }
  return scenario;
}

void finalize_scenario(const Scenario& scenario) {
  validate(scenario.config);
  const int sources = (scenario.distance_m ? 1 : 0) +
                      (scenario.config.gamma_override_db ? 1 : 0);
  if (sources != 1) {
    throw ConfigError(
        "scenario must set exactly one of distance_m and gamma_override_db");
  }
  if (scenario.distance_m && !(*scenario.distance_m > 0.0)) {
    throw ConfigError("distance_m must be positive");
  }
  if (scenario.sweep_grid < 0 || scenario.sweep_grid == 1) {
    throw ConfigError("sweep_grid must be 0 (full resolution) or >= 2");
  }
}

double scenario_distance(const Scenario& scenario) {
  if (scenario.distance_m) {
    return *scenario.distance_m;
  }
  return distance_for_gamma(
      scenario.config,
      snr_db_to_linear(*scenario.config.gamma_override_db));
}

LinkState scenario_link(const Scenario& scenario) {
  finalize_scenario(scenario);
  return build_link(scenario.config, scenario_distance(scenario));
}

}  // namespace ilac
