#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "greencoop/solvers.hpp"
#include "greencoop/testing/brute_force.hpp"

using namespace greencoop;

namespace {
double band_power(double w, double aggregate_rate) {
  return w * (std::pow(2.0, aggregate_rate / w) - 1.0);
}
}  // namespace

TEST_CASE("bisect finds the sharing-band crossing", "[solvers]") {
  // b (2^{5/b} - 1) = 10 locates the band split where BS 1's demand equals
  // its harvest in the reference instance.
  const double root = bisect([](double b) { return band_power(b, 5.0) - 10.0; }, 1.0, 5.0);
  CHECK(root == Catch::Approx(1.879797352398487).epsilon(1e-8));
}

TEST_CASE("bisect solves a linear root exactly", "[solvers]") {
  CHECK(bisect([](double x) { return x - 1.0; }, 0.0, 2.0) == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("bisect rejects a bracket without sign change", "[solvers]") {
  CHECK_THROWS_AS(bisect([](double x) { return x * x; }, 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("bisect is deterministic", "[solvers]") {
  auto f = [](double x) { return std::sin(x) - 0.3; };
  const double a = bisect(f, 0.0, 1.5);
  const double b = bisect(f, 0.0, 1.5);
  CHECK(a == b);
}

TEST_CASE("golden_min finds the total-power optimum of the reference split", "[solvers]") {
  // Q1(s) + Q2(s) for the case-study bands: minimized where per-terminal
  // bandwidth is equal across stations, at s = 5.
  auto total = [](double s) { return band_power(10.0 - s, 5.0) + band_power(10.0 + s, 15.0); };
  const double s = golden_min(total, -9.9, 9.9, {1e-9, 400});
  CHECK(s == Catch::Approx(5.0).margin(1e-6));
}

TEST_CASE("golden_min on a parabola and a kinked function", "[solvers]") {
  CHECK(golden_min([](double x) { return (x - 3.0) * (x - 3.0); }, 0.0, 10.0) ==
        Catch::Approx(3.0).margin(1e-8));
  CHECK(golden_min([](double x) { return std::abs(x - 0.25); }, 0.0, 1.0) ==
        Catch::Approx(0.25).margin(1e-8));
}

TEST_CASE("golden_min never returns worse than an endpoint", "[solvers]") {
  // Monotone function: minimum sits exactly on the boundary.
  auto f = [](double x) { return x; };
  const double x = golden_min(f, 2.0, 5.0);
  CHECK(x == 2.0);
}

TEST_CASE("golden_min is deterministic", "[solvers]") {
  auto f = [](double x) { return std::cos(x); };
  CHECK(golden_min(f, 0.0, 6.0) == golden_min(f, 0.0, 6.0));
}

TEST_CASE("weighted_split matches the hand-derived case", "[solvers]") {
  const std::vector<double> costs = {0.4, 0.5};
  const std::vector<double> gains = {0.6, 1.0};
  const auto p = weighted_split(costs, gains, 1.0);
  CHECK(p[0] == Catch::Approx(0.30612244897959184).epsilon(1e-12));
  CHECK(p[1] == Catch::Approx(0.32653061224489793).epsilon(1e-12));
  CHECK(weighted_split_cost(costs, gains, 1.0) == Catch::Approx(2.0 / 7.0).epsilon(1e-12));
}

TEST_CASE("weighted_split symmetric case and zero target", "[solvers]") {
  const std::vector<double> c = {1.0, 1.0};
  const std::vector<double> g = {1.0, 1.0};
  const auto p = weighted_split(c, g, 1.0);
  CHECK(p[0] == Catch::Approx(0.25).epsilon(1e-12));
  CHECK(p[1] == Catch::Approx(0.25).epsilon(1e-12));
  const auto z = weighted_split(c, g, 0.0);
  CHECK(z[0] == 0.0);
  CHECK(z[1] == 0.0);
}

TEST_CASE("weighted_split meets the constraint with equality", "[solvers]") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> c = {u(rng), u(rng), u(rng)};
    std::vector<double> g = {u(rng), u(rng), u(rng)};
    const double target = u(rng);
    const auto p = weighted_split(c, g, target);
    double amp = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) amp += std::sqrt(g[i] * p[i]);
    CHECK(amp * amp == Catch::Approx(target).margin(1e-9));
  }
}

TEST_CASE("weighted_split argmin is invariant to a uniform cost scale", "[solvers]") {
  const std::vector<double> c = {0.4, 0.5, 1.1};
  const std::vector<double> ct = {0.4 * 8.0, 0.5 * 8.0, 1.1 * 8.0};
  const std::vector<double> g = {0.6, 1.0, 0.2};
  const auto p = weighted_split(c, g, 1.7);
  const auto pt = weighted_split(ct, g, 1.7);
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i] == pt[i]);
}

TEST_CASE("weighted_split rejects degenerate inputs", "[solvers]") {
  const std::vector<double> zero = {0.0, 0.0};
  const std::vector<double> ones = {1.0, 1.0};
  CHECK_THROWS_AS(weighted_split(ones, zero, 1.0), infeasible_error);
  CHECK_THROWS_AS(weighted_split(zero, ones, 1.0), std::invalid_argument);
}

TEST_CASE("brute_force_oracle minimizes a parabola", "[solvers]") {
  const std::vector<std::pair<double, double>> box = {{0.0, 10.0}};
  const auto res = testing::brute_force_oracle(
      [](std::span<const double> x) { return (x[0] - 3.0) * (x[0] - 3.0); }, box, 2000);
  CHECK(res.argmin[0] == Catch::Approx(3.0).margin(0.01));
}

TEST_CASE("brute_force_oracle handles the constrained split example", "[solvers]") {
  // min a+b subject to (sqrt(a) + sqrt(0.6 b))^2 >= 1; optimum 1/1.6.
  const std::vector<std::pair<double, double>> box = {{0.0, 1.2}, {0.0, 2.0}};
  auto objective = [](std::span<const double> x) {
    const double amp = std::sqrt(x[0]) + std::sqrt(0.6 * x[1]);
    if (amp * amp < 1.0) return std::numeric_limits<double>::infinity();
    return x[0] + x[1];
  };
  const auto res = testing::brute_force_oracle(objective, box, 1000);
  CHECK(res.min == Catch::Approx(0.625).margin(5e-3));
  const auto refined = testing::refined_grid_min(objective, box, 400, 3);
  CHECK(refined.min == Catch::Approx(0.625).margin(1e-5));
}

TEST_CASE("brute_force_oracle enforces its limits", "[solvers]") {
  auto obj = [](std::span<const double>) { return 0.0; };
  const std::vector<std::pair<double, double>> box5(5, {0.0, 1.0});
  CHECK_THROWS_AS(testing::brute_force_oracle(obj, box5, 10), std::invalid_argument);
  const std::vector<std::pair<double, double>> box1 = {{0.0, 1.0}};
  CHECK_THROWS_AS(testing::brute_force_oracle(obj, box1, 4000), std::invalid_argument);
}
