#include <doctest.h>

#include <cmath>
#include <vector>

#include "ilac/capacity.hpp"
#include "test_helpers.hpp"

using ilac_test::rel_err;
using ilac_test::snr_config;
using ilac_test::snr_link;

TEST_CASE("capacity_exact") {
  const ilac::SystemConfig config = snr_config(8, 20.0);
  const ilac::LinkState link = snr_link(config);
  const int symbols_total = config.symbols_total;

  SUBCASE("linear in bandwidth") {
    const double half = ilac::capacity_exact(config, link, 5e6, 150, 4);
    const double full = ilac::capacity_exact(config, link, 10e6, 150, 4);
    CHECK(rel_err(full, 2.0 * half) < 1e-12);
  }

  SUBCASE("airtime boundary") {
    CHECK_THROWS_AS(ilac::capacity_exact(config, link, 20e6, 100, 100),
                    std::domain_error);
    CHECK_THROWS_AS(ilac::capacity_exact(config, link, 20e6, 100, 150),
                    std::domain_error);
    // One data symbol left: small but positive.
    const double last = ilac::capacity_exact(config, link, 20e6, 100, 99);
    CHECK(last > 0.0);
    CHECK(last < ilac::capacity_exact(config, link, 20e6, 100, 1));
  }

  SUBCASE("bandwidth range enforced") {
    CHECK_THROWS_AS(ilac::capacity_exact(config, link, 0.0, 100, 4),
                    std::domain_error);
    CHECK_THROWS_AS(ilac::capacity_exact(config, link, 21e6, 100, 4),
                    std::domain_error);
    CHECK_THROWS_AS(ilac::capacity_exact(config, link, 20e6, 100, 0),
                    std::domain_error);
  }

  SUBCASE("strictly increasing in bandwidth and block length") {
    double previous = 0.0;
    for (double bandwidth = 1e6; bandwidth <= 20e6; bandwidth += 1e6) {
      const double value =
          ilac::capacity_exact(config, link, bandwidth, 150, 4);
      CHECK(value > previous);
      previous = value;
    }
    previous = 0.0;
    for (int symbols = 10; symbols <= symbols_total; symbols += 10) {
      const double value = ilac::capacity_exact(config, link, 20e6, symbols, 4);
      CHECK(value > previous);
      previous = value;
    }
  }

  SUBCASE("frozen exhaustive argmax at the 20 dB setup") {
    CHECK(ilac::best_integer_pilot(config, link, 20e6, symbols_total) == 1);
    CHECK(rel_err(
              ilac::capacity_exact(config, link, 20e6, symbols_total, 1),
              43702673.31989211) < 1e-9);
  }
}

TEST_CASE("log_lower_bound") {
  SUBCASE("tight at the expansion point") {
    for (double x : {1e-3, 0.1, 1.0, 42.0, 1e4}) {
      CHECK(std::abs(ilac::log_lower_bound(x, x) - std::log1p(x)) < 1e-12);
    }
  }

  SUBCASE("below the logarithm everywhere") {
    CHECK(ilac::log_lower_bound(1.0, 2.0) <= std::log(2.0));
    for (int i = 0; i < 60; ++i) {
      const double x = 1e-2 * std::pow(10.0, 6.0 * i / 59.0);
      for (int j = 0; j < 60; ++j) {
        const double x_bar = 1e-2 * std::pow(10.0, 6.0 * j / 59.0);
        CHECK(ilac::log_lower_bound(x, x_bar) <= std::log1p(x) + 1e-12);
      }
    }
  }

  SUBCASE("domain") {
    CHECK_THROWS_AS(ilac::log_lower_bound(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(ilac::log_lower_bound(1.0, -1.0), std::domain_error);
  }
}

TEST_CASE("capacity_approx and the optimal pilot") {
  const ilac::SystemConfig config = snr_config(8, 20.0);
  const ilac::LinkState link = snr_link(config);
  const double bandwidth = config.total_bandwidth_hz;
  const int symbols_total = config.symbols_total;

  SUBCASE("matches the closed form at the optimal pilot") {
    for (double symbols_comm : {10.0, 50.0, 200.0}) {
      const double log_snr = link.effective_log_snr;
      const double penalty = config.n_antennas * link.epsilon / link.alpha;
      const double closed_form =
          bandwidth / symbols_total *
          (symbols_comm * log_snr -
           2.0 * std::sqrt(symbols_comm * penalty * log_snr) + penalty);
      CHECK(rel_err(ilac::optimal_capacity(config, link, bandwidth,
                                           symbols_comm),
                    closed_form) < 1e-12);
    }
  }

  SUBCASE("lower-bounds the exact capacity") {
    for (int pilot = 1; pilot < symbols_total; ++pilot) {
      CHECK(ilac::capacity_approx(config, link, bandwidth, symbols_total,
                                  pilot) <=
            ilac::capacity_exact(config, link, bandwidth, symbols_total,
                                 pilot) *
                    (1.0 + 1e-12) +
                1e-9);
    }
  }

  SUBCASE("bound capacity is exact at its expansion point") {
    const int expansion_pilot = 7;
    const double x_bar = ilac::exact_sinr(config, link, expansion_pilot);
    for (int pilot = 1; pilot < symbols_total; ++pilot) {
      const double airtime =
          static_cast<double>(symbols_total - pilot) / symbols_total;
      const double bound =
          bandwidth * airtime *
          ilac::log_lower_bound(ilac::exact_sinr(config, link, pilot), x_bar);
      const double exact =
          ilac::capacity_exact(config, link, bandwidth, symbols_total, pilot);
      CHECK(bound <= exact * (1.0 + 1e-12));
      if (pilot == expansion_pilot) {
        CHECK(rel_err(bound, exact) < 1e-9);
      }
    }
  }

  SUBCASE("square-root scaling of the optimal pilot") {
    const double base = ilac::optimal_pilot(config, link, 50.0);
    const double quadrupled = ilac::optimal_pilot(config, link, 200.0);
    CHECK(rel_err(quadrupled, 2.0 * base) < 1e-12);
  }

  SUBCASE("stationary and concave at the optimal pilot") {
    // Interior optimum needs a weak link; -20 dB puts it near 45 symbols.
    const ilac::SystemConfig weak_config = snr_config(8, -20.0);
    const ilac::LinkState weak_link = snr_link(weak_config);
    const double pilot = ilac::optimal_pilot(weak_config, weak_link,
                                             symbols_total);
    CHECK(pilot > 1.0);
    CHECK(pilot < symbols_total);

    const double step = pilot * 1e-5;
    const auto value = [&](double p) {
      return ilac::capacity_approx(weak_config, weak_link, bandwidth,
                                   symbols_total, p);
    };
    const double derivative =
        (value(pilot + step) - value(pilot - step)) / (2.0 * step);
    CHECK(std::abs(derivative) < 1e-6 * std::abs(value(pilot)));

    const double second_difference =
        value(pilot + step) - 2.0 * value(pilot) + value(pilot - step);
    CHECK(second_difference <= 0.0);

    // The continuous optimum dominates the whole interval.
    for (double p = 0.5; p < symbols_total; p += 3.7) {
      CHECK(value(pilot) >= value(p) - 1e-9 * std::abs(value(pilot)));
    }
  }

  SUBCASE("integer argmax of the approximation brackets the optimum") {
    for (const double gamma_db : {20.0, -20.0}) {
      const ilac::SystemConfig c = snr_config(8, gamma_db);
      const ilac::LinkState l = snr_link(c);
      for (int symbols_comm : {20, 100, 200}) {
        int argmax = 1;
        double best = ilac::capacity_approx(c, l, bandwidth, symbols_comm, 1.0);
        for (int pilot = 2; pilot < symbols_comm; ++pilot) {
          const double v =
              ilac::capacity_approx(c, l, bandwidth, symbols_comm, pilot);
          if (v > best) {
            best = v;
            argmax = pilot;
          }
        }
        const double continuous = ilac::optimal_pilot(c, l, symbols_comm);
        const double clamped = std::clamp(
            continuous, 1.0, static_cast<double>(symbols_comm - 1));
        const bool bracketed =
            argmax == static_cast<int>(std::floor(clamped)) ||
            argmax == static_cast<int>(std::ceil(clamped));
        CHECK(bracketed);
      }
    }
  }

  SUBCASE("domain checks") {
    CHECK_THROWS_AS(
        ilac::capacity_approx(config, link, bandwidth, symbols_total, 0.0),
        std::domain_error);
    CHECK_THROWS_AS(
        ilac::capacity_approx(config, link, bandwidth, 0.0, 1.0),
        std::domain_error);
    CHECK_THROWS_AS(ilac::optimal_pilot(config, link, 0.0), std::domain_error);
  }
}
