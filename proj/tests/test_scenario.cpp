#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>

#include "ilac/scenario.hpp"
#include "test_helpers.hpp"

using ilac_test::rel_err;

namespace {

// RAII scratch file for loader tests.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    path = std::string(std::tmpnam(nullptr)) + ".conf";
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("apply_setting") {
  ilac::Scenario scenario;

  SUBCASE("numeric and enum keys") {
    ilac::apply_setting(scenario, "carrier_freq_hz", "3.5e9");
    ilac::apply_setting(scenario, "n_antennas", "32");
    ilac::apply_setting(scenario, "theta_deg", "30");
    ilac::apply_setting(scenario, "epsilon_mode", "dl_over_ul");
    ilac::apply_setting(scenario, "sweep_domain", "frequency");
    ilac::apply_setting(scenario, "distance_m", "250");

    CHECK(scenario.config.carrier_freq_hz == 3.5e9);
    CHECK(scenario.config.n_antennas == 32);
    CHECK(rel_err(scenario.config.theta_rad, std::numbers::pi / 6.0) < 1e-12);
    CHECK(scenario.config.epsilon_mode == ilac::EpsilonMode::kDlOverUl);
    CHECK(scenario.sweep_domain == ilac::SweepDomain::kFrequency);
    CHECK(scenario.distance_m == 250.0);
  }

  SUBCASE("unknown key names the offender") {
    CHECK_THROWS_WITH_AS(ilac::apply_setting(scenario, "bandwidht_hz", "1"),
                         doctest::Contains("bandwidht_hz"),
                         ilac::ConfigError);
  }

  SUBCASE("bad values name the key") {
    CHECK_THROWS_WITH_AS(
        ilac::apply_setting(scenario, "total_bandwidth_hz", "wide"),
        doctest::Contains("total_bandwidth_hz"), ilac::ConfigError);
    CHECK_THROWS_AS(ilac::apply_setting(scenario, "symbols_total", "12.5"),
                    ilac::ConfigError);
    CHECK_THROWS_AS(ilac::apply_setting(scenario, "epsilon_mode", "half"),
                    ilac::ConfigError);
    CHECK_THROWS_AS(ilac::apply_setting(scenario, "sweep_domain", "age"),
                    ilac::ConfigError);
  }
}

TEST_CASE("scenario file loading") {
  SUBCASE("full file with comments") {
    const TempFile file(
        "# reference cell\n"
        "carrier_freq_hz = 2.6e9\n"
        "total_bandwidth_hz = 20e6\n"
        "n_antennas = 8\n"
        "distance_m = 100   # meters\n"
        "sweep_domain = both\n"
        "sweep_grid = 50\n"
        "\n"
        "output_dir = out\n");
    const ilac::Scenario scenario = ilac::load_scenario_file(file.path);
    ilac::finalize_scenario(scenario);
    CHECK(scenario.distance_m == 100.0);
    CHECK(scenario.sweep_grid == 50);
    CHECK(scenario.output_dir == "out");
    const ilac::LinkState link = ilac::scenario_link(scenario);
    CHECK(link.distance_m == 100.0);
  }

  SUBCASE("missing separator is a parse error") {
    const TempFile file("distance_m 100\n");
    CHECK_THROWS_AS(ilac::load_scenario_file(file.path), ilac::ConfigError);
  }

  SUBCASE("missing file") {
    CHECK_THROWS_AS(ilac::load_scenario_file("/nonexistent/ilac.conf"),
                    ilac::ConfigError);
  }
}

TEST_CASE("scenario finalization rules") {
  SUBCASE("needs a distance or an SNR pin") {
    ilac::Scenario scenario;
    CHECK_THROWS_AS(ilac::finalize_scenario(scenario), ilac::ConfigError);
  }

  SUBCASE("rejects both at once") {
    ilac::Scenario scenario;
    scenario.distance_m = 100.0;
    scenario.config.gamma_override_db = 20.0;
    CHECK_THROWS_AS(ilac::finalize_scenario(scenario), ilac::ConfigError);
  }

  SUBCASE("distance mode resolves directly") {
    ilac::Scenario scenario;
    scenario.distance_m = 321.0;
    CHECK(ilac::scenario_distance(scenario) == 321.0);
  }

  SUBCASE("SNR pin implies the budget distance") {
    ilac::Scenario scenario;
    scenario.config.gamma_override_db = 20.0;
    ilac::finalize_scenario(scenario);
    CHECK(rel_err(ilac::scenario_distance(scenario), 459.8725540459307) <
          1e-9);
    const ilac::LinkState link = ilac::scenario_link(scenario);
    CHECK(rel_err(link.gamma, 100.0) < 1e-12);
  }

  SUBCASE("sweep grid of one is rejected") {
    ilac::Scenario scenario;
    scenario.distance_m = 100.0;
    scenario.sweep_grid = 1;
    CHECK_THROWS_AS(ilac::finalize_scenario(scenario), ilac::ConfigError);
  }
}
