#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "greencoop/link.hpp"
#include "test_scenarios.hpp"

using namespace greencoop;

TEST_CASE("awgn_power reproduces the per-terminal reference demands", "[link]") {
  // Five links at w=2 make up BS 1's conventional demand, fifteen at w=2/3
  // make up BS 2's.
  CHECK(awgn_power(1.0, 2.0) == Catch::Approx(0.8284271247461901).epsilon(1e-12));
  CHECK(awgn_power(1.0, 2.0 / 3.0) == Catch::Approx(1.21895141649746).epsilon(1e-10));
  CHECK(awgn_power(0.0, 2.0) == 0.0);
}

TEST_CASE("awgn_power validates its inputs", "[link]") {
  CHECK_THROWS_AS(awgn_power(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(awgn_power(1.0, 1.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(awgn_power(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("awgn_rate inverts the power law", "[link]") {
  CHECK(awgn_rate(0.8284271247461901, 2.0) == Catch::Approx(1.0).epsilon(1e-12));
  CHECK(awgn_rate(0.0, 2.0) == 0.0);
  CHECK(awgn_rate(3.0, 1.0) == Catch::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(awgn_rate(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("power and rate round-trip within 1e-9 relative", "[link]") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> urate(1e-6, 64.0);
  std::uniform_real_distribution<double> ulogw(std::log(1e-3), std::log(1e3));
  int finite = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const double r = urate(rng);
    const double w = std::exp(ulogw(rng));
    const double p = awgn_power(r, w);
    if (!std::isfinite(p)) continue;  // beyond double range; nothing to invert
    ++finite;
    const double back = awgn_rate(p, w);
    CHECK(std::abs(back - r) <= 1e-9 * r);
  }
  CHECK(finite > 2500);
}

TEST_CASE("awgn_power is monotone in rate, bandwidth and gain", "[link]") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.1, 8.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double r = u(rng), w = u(rng), g = u(rng), n0 = u(rng);
    const double base = awgn_power(r, w, n0, g);
    CHECK(awgn_power(r * 1.1, w, n0, g) > base);
    CHECK(awgn_power(r, w * 1.1, n0, g) < base);
    CHECK(awgn_power(r, w, n0, g * 1.1) < base);
  }
}

TEST_CASE("conventional demand reproduces the reference consumption", "[link]") {
  const PowerProfile q = conventional_demand(gctest::case_study());
  CHECK(q.per_bs_power[0] == Catch::Approx(4.142135623730951).margin(1e-6));
  CHECK(q.per_bs_power[1] == Catch::Approx(18.284271247461902).margin(1e-6));
}

TEST_CASE("a station without terminals demands nothing", "[link]") {
  const auto s = gctest::make_scenario({5.0, 5.0}, {10, 10}, {0, 0}, {1.0, 1.0},
                                       {1.0, 1.0, 0.6, 0.6});
  const PowerProfile q = conventional_demand(s);
  CHECK(q.per_bs_power[1] == 0.0);
}

TEST_CASE("single station with two terminals splits its band equally", "[link]") {
  const auto s = gctest::make_scenario({0.0}, {2.0}, {0, 0}, {1.0, 1.0}, {1.0, 1.0});
  const PowerProfile q = conventional_demand(s);
  CHECK(q.per_bs_power[0] == Catch::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("conventional demand is additive over a station's terminals", "[link]") {
  std::mt19937_64 rng(8);
  const auto s = gctest::random_small_instance(rng);
  const PowerProfile q = conventional_demand(s);
  for (std::size_t b = 0; b < s.bs_count(); ++b) {
    const auto mts = s.home_terminals(b);
    if (mts.empty()) continue;
    const double w = s.base_stations[b].bandwidth / static_cast<double>(mts.size());
    double sum = 0.0;
    for (std::size_t m : mts)
      sum += awgn_power(s.terminals[m].min_rate, w, s.noise_density, s.channel.gain(b, m));
    CHECK(q.per_bs_power[b] == Catch::Approx(sum).margin(1e-12));
  }
}

TEST_CASE("zero-bandwidth station with terminals is infeasible", "[link]") {
  auto s = gctest::make_scenario({0.0}, {0.0}, {0}, {1.0}, {1.0});
  CHECK_THROWS_AS(conventional_demand(s), infeasible_error);
}

TEST_CASE("comp_target follows the same law", "[link]") {
  CHECK(comp_target(1.0, 1.0) == Catch::Approx(1.0).epsilon(1e-12));
  CHECK(comp_target(1.0, 2.0) == Catch::Approx(0.8284271247461901).epsilon(1e-12));
  CHECK(comp_target(0.0, 1.0) == 0.0);
  CHECK_THROWS_AS(comp_target(1.0, 0.0), std::invalid_argument);
}
