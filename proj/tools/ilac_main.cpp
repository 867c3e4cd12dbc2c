// Command-line front end: single-point evaluations, frontier sweeps to CSV,
// and the brute-force validation suite. All numbers come from library calls;
// the only arithmetic here is the nats-to-bits unit conversion.

#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ilac/capacity.hpp"
#include "ilac/crb.hpp"
#include "ilac/link_model.hpp"
#include "ilac/oracle.hpp"
#include "ilac/report.hpp"
#include "ilac/scenario.hpp"
#include "ilac/tradeoff.hpp"

namespace {

void print_value(const std::string& key, double value) {
  std::cout << key << " = " << ilac::format_double(value) << "\n";
}

void print_nats_and_bits(const std::string& key, double nats) {
  print_value(key + "_nats_per_s", nats);
  print_value(key + "_bits_per_s", nats / std::numbers::ln2);
}

int cmd_capacity(const ilac::Scenario& scenario) {
  const ilac::SystemConfig& config = scenario.config;
  const ilac::LinkState link = ilac::scenario_link(scenario);
  const double bandwidth = config.total_bandwidth_hz;
  const int symbols = config.symbols_total;

  const double pilot_continuous = ilac::optimal_pilot(config, link, symbols);
  const int pilot_integer =
      ilac::best_integer_pilot(config, link, bandwidth, symbols);

  print_value("distance_m", link.distance_m);
  print_value("gamma_db", ilac::linear_to_snr_db(link.gamma));
  print_nats_and_bits(
      "capacity_exact",
      ilac::capacity_exact(config, link, bandwidth, symbols, pilot_integer));
  print_nats_and_bits("capacity_approx",
                      ilac::optimal_capacity(config, link, bandwidth, symbols));
  print_value("pilot_continuous_symbols", pilot_continuous);
  print_value("pilot_integer_symbols", pilot_integer);
  print_value("pilot_overhead_fraction",
              static_cast<double>(pilot_integer) / symbols);
  return 0;
}

int cmd_crb(const ilac::Scenario& scenario, double symbols_loc,
            double bandwidth_loc) {
  const ilac::SystemConfig& config = scenario.config;
  const ilac::LinkState link = ilac::scenario_link(scenario);
  print_value("distance_m", link.distance_m);
  print_value("toa_s", link.toa_s);
  print_value("gamma_db", ilac::linear_to_snr_db(link.gamma));
  print_value("tau_L", symbols_loc);
  print_value("B_L_hz", bandwidth_loc);
  print_value("crb_aoa_rad2", ilac::crb_aoa(config, link, symbols_loc));
  print_value("crb_toa_s2",
              ilac::crb_toa(config, link, bandwidth_loc, symbols_loc));
  print_value("crb_position_m2",
              ilac::crb_position(config, link, bandwidth_loc, symbols_loc));
  return 0;
}

int cmd_tradeoff_time(const ilac::Scenario& scenario, bool has_symbols,
                      double symbols_loc, double capacity_loss) {
  const ilac::SystemConfig& config = scenario.config;
  const ilac::LinkState link = ilac::scenario_link(scenario);

  if (has_symbols) {
    const ilac::TimeCapacityLoss loss =
        ilac::capacity_loss_time(config, link, symbols_loc);
    print_value("tau_L", symbols_loc);
    print_value("capacity_loss_paper_nats", loss.paper_form);
    print_value("capacity_loss_exact_nats", loss.exact_form);
    print_value("warn_negative_loss", loss.negative_paper_form ? 1.0 : 0.0);
    print_value("crb_loss_ratio", ilac::crb_loss_time(config, symbols_loc));
    if (!loss.negative_paper_form) {
      print_value("theorem1_crb_loss",
                  ilac::theorem1_crb_loss(config, link, loss.paper_form));
    }
    return 0;
  }

  const double symbols =
      ilac::tau_loc_from_capacity_loss(config, link, capacity_loss);
  print_value("capacity_loss_nats", capacity_loss);
  print_value("tau_L", symbols);
  print_value("crb_loss_ratio", ilac::crb_loss_time(config, symbols));
  print_value("theorem1_crb_loss",
              ilac::theorem1_crb_loss(config, link, capacity_loss));
  return 0;
}

int cmd_tradeoff_freq(const ilac::Scenario& scenario, bool has_bandwidth,
                      double bandwidth_loc, double capacity_loss) {
  const ilac::SystemConfig& config = scenario.config;
  const ilac::LinkState link = ilac::scenario_link(scenario);

  if (has_bandwidth) {
    print_value("B_L_hz", bandwidth_loc);
    print_value("capacity_loss_nats",
                ilac::capacity_loss_freq(config, link, bandwidth_loc));
    print_value("crb_loss_ratio",
                ilac::crb_loss_freq(config, link, bandwidth_loc));
    print_value("crb_loss_printed_form",
                ilac::eq11_crb_loss_freq(config, link, bandwidth_loc));
    return 0;
  }

  const double bandwidth =
      ilac::bandwidth_from_capacity_loss(config, link, capacity_loss);
  print_value("capacity_loss_nats", capacity_loss);
  print_value("B_L_hz", bandwidth);
  print_value("crb_loss_ratio", ilac::crb_loss_freq(config, link, bandwidth));
  print_value("theorem2_crb_loss",
              ilac::theorem2_crb_loss(config, link, capacity_loss));
  if (bandwidth > 0.0) {
    print_value("crb_loss_printed_form",
                ilac::eq11_crb_loss_freq(config, link, bandwidth));
  }
  return 0;
}

int cmd_frontier(const ilac::Scenario& scenario,
                 const std::string& domain_override) {
  const ilac::SystemConfig& config = scenario.config;
  const ilac::LinkState link = ilac::scenario_link(scenario);

  ilac::SweepDomain wanted = scenario.sweep_domain;
  if (domain_override == "time") wanted = ilac::SweepDomain::kTime;
  if (domain_override == "frequency") wanted = ilac::SweepDomain::kFrequency;
  if (domain_override == "both") wanted = ilac::SweepDomain::kBoth;

  std::error_code dir_error;
  std::filesystem::create_directories(scenario.output_dir, dir_error);
  if (dir_error) {
    throw ilac::ConfigError("cannot create output directory: " +
                            scenario.output_dir);
  }

  const auto run_domain = [&](ilac::AllocationDomain domain,
                              const std::string& name) {
    const ilac::SweepResult sweep =
        ilac::sweep_frontier(config, link, domain, scenario.sweep_grid);
    const std::string path =
        (std::filesystem::path(scenario.output_dir) /
         ("frontier_" + name + ".csv"))
            .string();
    ilac::write_frontier_csv(sweep, path);
    std::cout << "wrote " << path << " rows=" << sweep.points.size() << "\n";
  };

  if (wanted != ilac::SweepDomain::kFrequency) {
    run_domain(ilac::AllocationDomain::kTime, "time");
  }
  if (wanted != ilac::SweepDomain::kTime) {
    run_domain(ilac::AllocationDomain::kFrequency, "frequency");
  }
  return 0;
}

int cmd_validate(const ilac::Scenario& scenario, bool corrupt_alpha) {
  const ilac::SystemConfig& config = scenario.config;
  const ilac::LinkState link = ilac::scenario_link(scenario);

  std::vector<ilac::OracleReport> reports;
  reports.push_back(ilac::audit_inequality_eq13(100));
  reports.push_back(ilac::audit_pilot_optimum(config, link));

  std::optional<ilac::LinkState> subject;
  if (corrupt_alpha) {
    ilac::LinkState corrupted = link;
    corrupted.alpha *= 1.05;
    subject = corrupted;
  }
  const auto roundtrips =
      ilac::audit_theorem_roundtrips(config, link, 100, subject);
  reports.push_back(roundtrips[0]);
  reports.push_back(roundtrips[1]);

  // Reference dominance pair: few antennas at low SNR against many antennas
  // at high SNR, built on top of the scenario's radio parameters.
  ilac::SystemConfig config_a = config;
  config_a.n_antennas = 8;
  config_a.gamma_override_db = 10.0;
  ilac::SystemConfig config_b = config;
  config_b.n_antennas = 32;
  config_b.gamma_override_db = 30.0;
  const ilac::LinkState link_a = ilac::build_link(
      config_a,
      ilac::distance_for_gamma(config_a, ilac::snr_db_to_linear(10.0)));
  const ilac::LinkState link_b = ilac::build_link(
      config_b,
      ilac::distance_for_gamma(config_b, ilac::snr_db_to_linear(30.0)));
  reports.push_back(
      ilac::audit_frontier_dominance(config_a, link_a, config_b, link_b));

  bool all_passed = true;
  for (const ilac::OracleReport& report : reports) {
    std::cout << ilac::format_report_line(report) << "\n";
    all_passed = all_passed && report.passed;
  }
  std::cout << "validate: " << (all_passed ? "PASS" : "FAIL") << "\n";
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacity / localization-CRB trade-off analysis for a shared "
               "5G NR resource grid"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir;
  int grid = -1;
  app.add_option("--config", config_path, "scenario file (key = value lines)");
  app.add_option("--set", overrides,
                 "override one scenario key, e.g. --set distance_m=100");
  app.add_option("--out", out_dir, "output directory for CSV files");
  app.add_option("--grid", grid, "sweep resolution (0 = every resource element)");

  CLI::App* capacity_cmd =
      app.add_subcommand("capacity", "capacity and optimal pilot length");

  CLI::App* crb_cmd =
      app.add_subcommand("crb", "localization CRBs for one split");
  double crb_symbols = -1.0;
  double crb_bandwidth = -1.0;
  crb_cmd->add_option("--tau-l", crb_symbols,
                      "localization symbols (default: all)");
  crb_cmd->add_option("--b-l", crb_bandwidth,
                      "localization bandwidth in Hz (default: all)");

  CLI::App* ttime_cmd = app.add_subcommand(
      "tradeoff-time", "time-domain capacity loss vs CRB loss");
  double ttime_symbols = 0.0;
  double ttime_loss = 0.0;
  CLI::Option* ttime_symbols_opt =
      ttime_cmd->add_option("--tau-l", ttime_symbols, "localization symbols");
  CLI::Option* ttime_loss_opt = ttime_cmd->add_option(
      "--capacity-loss", ttime_loss, "capacity loss in nats/s");

  CLI::App* tfreq_cmd = app.add_subcommand(
      "tradeoff-freq", "frequency-domain capacity loss vs CRB loss");
  double tfreq_bandwidth = 0.0;
  double tfreq_loss = 0.0;
  CLI::Option* tfreq_bandwidth_opt = tfreq_cmd->add_option(
      "--b-l", tfreq_bandwidth, "localization bandwidth in Hz");
  CLI::Option* tfreq_loss_opt = tfreq_cmd->add_option(
      "--capacity-loss", tfreq_loss, "capacity loss in nats/s");

  CLI::App* frontier_cmd =
      app.add_subcommand("frontier", "sweep the allocation, write CSV");
  std::string frontier_domain;
  frontier_cmd->add_option("--domain", frontier_domain,
                           "time, frequency or both (overrides the scenario)")
      ->check(CLI::IsMember({"time", "frequency", "both"}));

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "run the brute-force audit suite");
  bool corrupt_alpha = false;
  validate_cmd
      ->add_flag("--corrupt-alpha", corrupt_alpha,
                 "fault-injection hook: perturb alpha in the closed forms")
      ->group("");  // test hook, hidden from help

  CLI11_PARSE(app, argc, argv);

  try {
    ilac::Scenario scenario;
    if (!config_path.empty()) {
      scenario = ilac::load_scenario_file(config_path);
    }
    for (const std::string& setting : overrides) {
      const size_t equals = setting.find('=');
      if (equals == std::string::npos) {
        throw ilac::ConfigError("--set expects key=value, got: " + setting);
      }
      ilac::apply_setting(scenario, setting.substr(0, equals),
                          setting.substr(equals + 1));
    }
    if (!out_dir.empty()) scenario.output_dir = out_dir;
    if (grid >= 0) scenario.sweep_grid = grid;
    ilac::finalize_scenario(scenario);

    if (app.got_subcommand(capacity_cmd)) {
      return cmd_capacity(scenario);
    }
    if (app.got_subcommand(crb_cmd)) {
      if (crb_symbols < 0.0) crb_symbols = scenario.config.symbols_total;
      if (crb_bandwidth < 0.0) {
        crb_bandwidth = scenario.config.total_bandwidth_hz;
      }
      return cmd_crb(scenario, crb_symbols, crb_bandwidth);
    }
    if (app.got_subcommand(ttime_cmd)) {
      if ((ttime_symbols_opt->count() > 0) == (ttime_loss_opt->count() > 0)) {
        throw ilac::ConfigError(
            "tradeoff-time needs exactly one of --tau-l and --capacity-loss");
      }
      return cmd_tradeoff_time(scenario, ttime_symbols_opt->count() > 0,
                               ttime_symbols, ttime_loss);
    }
    if (app.got_subcommand(tfreq_cmd)) {
      if ((tfreq_bandwidth_opt->count() > 0) == (tfreq_loss_opt->count() > 0)) {
        throw ilac::ConfigError(
            "tradeoff-freq needs exactly one of --b-l and --capacity-loss");
      }
      return cmd_tradeoff_freq(scenario, tfreq_bandwidth_opt->count() > 0,
                               tfreq_bandwidth, tfreq_loss);
    }
    if (app.got_subcommand(frontier_cmd)) {
      return cmd_frontier(scenario, frontier_domain);
    }
    if (app.got_subcommand(validate_cmd)) {
      return cmd_validate(scenario, corrupt_alpha);
    }
  } catch (const ilac::ConfigError& error) {
    std::cerr << "config error: " << error.what() << "\n";
    return 2;
  } catch (const std::domain_error& error) {
    std::cerr << "config error: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
  return 0;
}
