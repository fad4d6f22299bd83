#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "greencoop/link.hpp"
#include "greencoop/spectrum.hpp"
#include "test_scenarios.hpp"

using namespace greencoop;

TEST_CASE("zero sharing degenerates to the conventional demand", "[spectrum]") {
  const Scenario s = gctest::case_study();
  const PowerProfile q = spectrum_demand(s, make_partition(s, 0.0));
  const PowerProfile conv = conventional_demand(s);
  CHECK(q.per_bs_power[0] == Catch::Approx(conv.per_bs_power[0]).margin(1e-12));
  CHECK(q.per_bs_power[1] == Catch::Approx(conv.per_bs_power[1]).margin(1e-12));
}

TEST_CASE("the reference partition hits the published consumptions", "[spectrum]") {
  const Scenario s = gctest::case_study();
  const PowerProfile q = spectrum_demand(s, make_partition(s, 8.12));
  CHECK(q.per_bs_power[0] == Catch::Approx(10.0).margin(0.01));
  CHECK(q.per_bs_power[1] == Catch::Approx(14.04).margin(0.01));

  const PowerProfile q5 = spectrum_demand(s, make_partition(s, 5.0));
  CHECK(q5.per_bs_power[0] == Catch::Approx(5.0).margin(1e-9));
  CHECK(q5.per_bs_power[1] == Catch::Approx(15.0).margin(1e-9));
}

TEST_CASE("spectrum demand rejects starving a loaded station", "[spectrum]") {
  const Scenario s = gctest::case_study();
  SpectrumPartition part;
  part.shared_amount = 10.0;
  part.effective_bandwidths = {0.0, 20.0};
  CHECK_THROWS_AS(spectrum_demand(s, part), infeasible_error);
}

TEST_CASE("optimizer reproduces the reference spectrum-sharing row", "[spectrum]") {
  const Scenario s = gctest::case_study();
  const SpectrumSolution sol = optimize_spectrum_sharing(s);
  CHECK(sol.partition.shared_amount == Catch::Approx(8.120202647601513).margin(1e-6));
  CHECK(sol.profile.per_bs_power[0] == Catch::Approx(10.0).margin(1e-6));
  CHECK(sol.profile.per_bs_power[1] == Catch::Approx(14.042851337418318).margin(1e-6));
  CHECK(sol.cost.total == Catch::Approx(11.542851337418318).margin(1e-6));
}

TEST_CASE("optimizer objective matches a dense grid scan", "[spectrum]") {
  const Scenario s = gctest::case_study();
  const SpectrumSolution sol = optimize_spectrum_sharing(s);
  const double pi = s.tariff.grid_price;
  double best = std::numeric_limits<double>::infinity();
  const double lo = -10.0 + 1e-6, hi = 10.0 - 1e-6;
  for (int i = 0; i <= 100000; ++i) {
    const double sh = lo + (hi - lo) * i / 100000.0;
    const NetLoad nl = net_load(spectrum_demand(s, make_partition(s, sh)), s);
    best = std::min(best, pi * nl.total_deficit);
  }
  CHECK(sol.cost.total <= best + 1e-6);
}

TEST_CASE("with no renewable energy the optimum equalizes per-terminal bandwidth", "[spectrum]") {
  Scenario s = gctest::case_study();
  s.base_stations[0].harvest_rate = 0.0;
  s.base_stations[1].harvest_rate = 0.0;
  const SpectrumSolution sol = optimize_spectrum_sharing(s);
  CHECK(sol.partition.shared_amount == Catch::Approx(5.0).margin(1e-6));
  CHECK(sol.cost.total == Catch::Approx(20.0).margin(1e-6));
}

TEST_CASE("with abundant renewable energy no sharing is preferred", "[spectrum]") {
  Scenario s = gctest::case_study();
  s.base_stations[0].harvest_rate = 1000.0;
  s.base_stations[1].harvest_rate = 1000.0;
  const SpectrumSolution sol = optimize_spectrum_sharing(s);
  CHECK(sol.cost.total == 0.0);
  CHECK(sol.partition.shared_amount == 0.0);
}

TEST_CASE("spectrum sharing is limited to two stations", "[spectrum]") {
  const auto s3 = gctest::make_scenario({1, 1, 1}, {10, 10, 10}, {0}, {1.0}, {1, 0.5, 0.5});
  CHECK_THROWS_AS(optimize_spectrum_sharing(s3), unsupported_error);
}

TEST_CASE("sharing never beats the optimizer's choice and never hurts", "[spectrum]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Scenario s = gctest::random_small_instance(rng);
    const SpectrumSolution sol = optimize_spectrum_sharing(s);
    const double conventional = cost_baseline(conventional_demand(s), s).total;
    CHECK(sol.cost.total <= conventional + 1e-9);
  }
}
