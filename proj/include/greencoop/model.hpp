// model.hpp - domain types, scenario validation, net-load bookkeeping.
//
// Single-slot model with unit slot length: energy and power are the same
// quantity and all units are normalized. Every type here is an immutable
// value after construction; nothing holds temporal state.
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace greencoop {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scenario/scheme combination that the library deliberately does not model
// (e.g. spectrum sharing with more than two base stations).
class unsupported_error : public error {
 public:
  using error::error;
};

// QoS cannot be met with any finite allocation.
class infeasible_error : public error {
 public:
  using error::error;
};

// Iteration cap exceeded or bracket lost; always a loud failure.
class solver_error : public error {
 public:
  using error::error;
};

struct BaseStation {
  int id = 0;
  double harvest_rate = 0.0;  // renewable energy per slot, >= 0
  double bandwidth = 0.0;     // spectrum units, > 0
};

struct MobileTerminal {
  int id = 0;
  int home_bs = 0;
  double min_rate = 0.0;  // QoS floor, > 0
};

enum class ChannelMode { deterministic_average, seeded_random };

// BS x MT power-gain matrix. Deterministic mode fills the stated average
// gains (own cell vs cross cell); seeded mode draws i.i.d. exponential
// (Rayleigh power) gains scaled by those averages. The seeded draw is
// hand-rolled so equal seeds give bit-identical matrices on any platform.
struct ChannelMatrix {
  ChannelMode mode = ChannelMode::deterministic_average;
  double own_mean = 1.0;
  double cross_mean = 0.6;
  std::optional<std::uint64_t> seed;
  std::size_t n_bs = 0;
  std::size_t n_mt = 0;
  std::vector<double> gains;  // row-major, gains[bs * n_mt + mt]

  double gain(std::size_t bs, std::size_t mt) const { return gains[bs * n_mt + mt]; }

  static ChannelMatrix deterministic(std::size_t bs_count, const std::vector<int>& home_bs,
                                     double own, double cross) {
    ChannelMatrix c;
    c.mode = ChannelMode::deterministic_average;
    c.own_mean = own;
    c.cross_mean = cross;
    c.n_bs = bs_count;
    c.n_mt = home_bs.size();
    c.gains.resize(c.n_bs * c.n_mt);
    for (std::size_t b = 0; b < c.n_bs; ++b)
      for (std::size_t m = 0; m < c.n_mt; ++m)
        c.gains[b * c.n_mt + m] = (static_cast<std::size_t>(home_bs[m]) == b) ? own : cross;
    return c;
  }

  static ChannelMatrix seeded(std::size_t bs_count, const std::vector<int>& home_bs,
                              double own, double cross, std::uint64_t seed) {
    ChannelMatrix c;
    c.mode = ChannelMode::seeded_random;
    c.own_mean = own;
    c.cross_mean = cross;
    c.seed = seed;
    c.n_bs = bs_count;
    c.n_mt = home_bs.size();
    c.gains.resize(c.n_bs * c.n_mt);
    std::mt19937_64 rng(seed);
    for (std::size_t b = 0; b < c.n_bs; ++b) {
      for (std::size_t m = 0; m < c.n_mt; ++m) {
        // 53-bit uniform in [0,1); -log1p(-u) is a unit-mean exponential.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double mean = (static_cast<std::size_t>(home_bs[m]) == b) ? own : cross;
        c.gains[b * c.n_mt + m] = -mean * std::log1p(-u);
      }
    }
    return c;
  }

  static ChannelMatrix explicit_gains(std::size_t bs_count, std::vector<double> gains) {
    ChannelMatrix c;
    c.mode = ChannelMode::deterministic_average;
    c.n_bs = bs_count;
    c.n_mt = bs_count == 0 ? 0 : gains.size() / bs_count;
    c.gains = std::move(gains);
    return c;
  }
};

struct Tariff {
  double grid_price = 1.0;      // pi
  double agg_buy_price = 0.5;   // price paid to the aggregator per unit bought
  double agg_sell_price = 0.4;  // price received per unit sold
  double contract_fee = 0.0;    // flat fee for the sharing contract
  double transfer_loss = 0.0;   // fraction lost per transferred unit, in [0,1)
};

struct Scenario {
  std::vector<BaseStation> base_stations;
  std::vector<MobileTerminal> terminals;
  ChannelMatrix channel;
  double noise_density = 1.0;
  Tariff tariff;

  std::size_t bs_count() const { return base_stations.size(); }
  std::size_t mt_count() const { return terminals.size(); }

  std::vector<std::size_t> home_terminals(std::size_t bs) const {
    std::vector<std::size_t> out;
    for (std::size_t m = 0; m < terminals.size(); ++m)
      if (static_cast<std::size_t>(terminals[m].home_bs) == bs) out.push_back(m);
    return out;
  }

  double total_bandwidth() const {
    double w = 0.0;
    for (const auto& bs : base_stations) w += bs.bandwidth;
    return w;
  }
};

struct PowerProfile {
  std::vector<double> per_bs_power;  // consumption Q_i, >= 0
};

struct NetLoad {
  std::vector<double> per_bs_delta;  // Q_i - E_i
  double total_deficit = 0.0;        // sum of positive deltas
  double total_surplus = 0.0;        // sum of negative deltas, as a magnitude
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool pass() const { return issues.empty(); }
};

// Collected-report validation: every violated invariant is listed, nothing
// throws, so a caller can surface all problems at once.
inline ValidationReport validate_scenario(const Scenario& s) {
  ValidationReport rep;
  auto fail = [&rep](std::string msg) { rep.issues.push_back(std::move(msg)); };

  if (s.base_stations.empty()) fail("scenario must contain at least one base station");
  for (std::size_t i = 0; i < s.base_stations.size(); ++i) {
    const auto& bs = s.base_stations[i];
    if (bs.id != static_cast<int>(i))
      fail("base station ids must be contiguous from 0: index " + std::to_string(i) +
           " has id " + std::to_string(bs.id));
    if (!(bs.harvest_rate >= 0.0))
      fail("base station " + std::to_string(i) + ": harvest_rate must be >= 0");
    if (!(bs.bandwidth > 0.0))
      fail("base station " + std::to_string(i) + ": bandwidth must be > 0");
  }
  for (std::size_t m = 0; m < s.terminals.size(); ++m) {
    const auto& mt = s.terminals[m];
    if (mt.id != static_cast<int>(m))
      fail("terminal ids must be contiguous from 0: index " + std::to_string(m) + " has id " +
           std::to_string(mt.id));
    if (!(mt.min_rate > 0.0)) fail("terminal " + std::to_string(m) + ": min_rate must be > 0");
    if (mt.home_bs < 0 || static_cast<std::size_t>(mt.home_bs) >= s.base_stations.size())
      fail("terminal " + std::to_string(m) + ": home_bs " + std::to_string(mt.home_bs) +
           " does not exist");
  }
  if (s.channel.n_bs != s.base_stations.size() || s.channel.n_mt != s.terminals.size())
    fail("channel matrix dimensions do not match base station / terminal counts");
  for (double g : s.channel.gains)
    if (!(g >= 0.0)) {
      fail("channel gains must all be >= 0");
      break;
    }
  if (!(s.noise_density > 0.0)) fail("noise_density must be > 0");

  const Tariff& t = s.tariff;
  if (!(t.agg_sell_price > 0.0 && t.agg_sell_price < t.agg_buy_price &&
        t.agg_buy_price < t.grid_price))
    fail("tariff must satisfy 0 < agg_sell < agg_buy < grid_price");
  if (!(t.contract_fee >= 0.0)) fail("tariff: contract_fee must be >= 0");
  if (!(t.transfer_loss >= 0.0 && t.transfer_loss < 1.0))
    fail("tariff: transfer_loss must lie in [0, 1)");
  return rep;
}

inline NetLoad net_load(const PowerProfile& q, const Scenario& s) {
  if (q.per_bs_power.size() != s.base_stations.size())
    throw std::invalid_argument("net_load: power profile has " +
                                std::to_string(q.per_bs_power.size()) + " entries for " +
                                std::to_string(s.base_stations.size()) + " base stations");
  NetLoad nl;
  nl.per_bs_delta.resize(q.per_bs_power.size());
  for (std::size_t i = 0; i < q.per_bs_power.size(); ++i) {
    const double d = q.per_bs_power[i] - s.base_stations[i].harvest_rate;
    nl.per_bs_delta[i] = d;
    if (d > 0.0)
      nl.total_deficit += d;
    else
      nl.total_surplus += -d;
  }
  return nl;
}

}  // namespace greencoop
