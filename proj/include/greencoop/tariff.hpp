// tariff.hpp - the three energy cost models and the settlements that realize
// them: grid-only purchase, two-way aggregator trading, and contract-based
// pairwise sharing through the aggregator.
#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "greencoop/model.hpp"

namespace greencoop {

struct EnergyLedger {
  struct Transfer {
    int from_bs = 0;
    int to_bs = 0;
    double amount = 0.0;  // energy injected at the source; the sink draws amount*(1-loss)
  };

  std::vector<double> grid_buy;  // per BS, bought from the grid at grid_price
  std::vector<double> agg_buy;   // per BS, bought from the aggregator
  std::vector<double> agg_sell;  // per BS, sold to the aggregator
  std::vector<Transfer> transfers;
  double contract_fee_paid = 0.0;
};

struct CostBreakdown {
  double grid_cost = 0.0;
  double agg_buy_cost = 0.0;
  double agg_sell_revenue = 0.0;
  double contract_fee = 0.0;
  double total = 0.0;  // grid + agg_buy - agg_sell + fee; may be negative
};

namespace detail {

inline CostBreakdown assemble(const Scenario& s, const EnergyLedger& led) {
  CostBreakdown c;
  for (double v : led.grid_buy) c.grid_cost += v * s.tariff.grid_price;
  for (double v : led.agg_buy) c.agg_buy_cost += v * s.tariff.agg_buy_price;
  for (double v : led.agg_sell) c.agg_sell_revenue += v * s.tariff.agg_sell_price;
  c.contract_fee = led.contract_fee_paid;
  c.total = c.grid_cost + c.agg_buy_cost - c.agg_sell_revenue + c.contract_fee;
  return c;
}

inline EnergyLedger empty_ledger(std::size_t n) {
  EnergyLedger led;
  led.grid_buy.assign(n, 0.0);
  led.agg_buy.assign(n, 0.0);
  led.agg_sell.assign(n, 0.0);
  return led;
}

}  // namespace detail

// Baseline: every deficit BS buys its whole deficit from the grid; surplus
// renewable is wasted. Total cost = grid_price * total_deficit.
inline CostBreakdown cost_baseline(const PowerProfile& q, const Scenario& s) {
  const NetLoad nl = net_load(q, s);
  CostBreakdown c;
  c.grid_cost = s.tariff.grid_price * nl.total_deficit;
  c.total = c.grid_cost;
  return c;
}

inline EnergyLedger baseline_ledger(const PowerProfile& q, const Scenario& s) {
  const NetLoad nl = net_load(q, s);
  EnergyLedger led = detail::empty_ledger(s.bs_count());
  for (std::size_t i = 0; i < nl.per_bs_delta.size(); ++i)
    led.grid_buy[i] = std::max(nl.per_bs_delta[i], 0.0);
  return led;
}

// Two-way trading through the aggregator: surplus stations sell everything at
// agg_sell_price; deficit stations buy min(total_deficit, total_surplus) at
// agg_buy_price (the aggregate quota equals the surplus sold in) and cover
// the remainder from the grid. When the quota binds, purchases are rationed
// proportionally to each station's deficit; the total cost is unaffected by
// the rationing rule.
inline std::pair<EnergyLedger, CostBreakdown> settle_trading(const PowerProfile& q,
                                                             const Scenario& s) {
  const Tariff& t = s.tariff;
  if (!(t.agg_sell_price > 0.0 && t.agg_sell_price < t.agg_buy_price &&
        t.agg_buy_price < t.grid_price))
    throw std::invalid_argument(
        "settle_trading: tariff must satisfy 0 < agg_sell < agg_buy < grid_price");
  const NetLoad nl = net_load(q, s);
  EnergyLedger led = detail::empty_ledger(s.bs_count());
  const double quota = std::min(nl.total_deficit, nl.total_surplus);
  for (std::size_t i = 0; i < nl.per_bs_delta.size(); ++i) {
    const double d = nl.per_bs_delta[i];
    if (d < 0.0) {
      led.agg_sell[i] = -d;
    } else if (d > 0.0) {
      const double share = nl.total_deficit > 0.0 ? quota * (d / nl.total_deficit) : 0.0;
      led.agg_buy[i] = share;
      led.grid_buy[i] = d - share;
    }
  }
  return {led, detail::assemble(s, led)};
}

// Contract-based sharing: surplus stations inject energy into the aggregator
// while deficit stations simultaneously draw it, at a flat contract fee.
// Transfers are matched greedily, largest remaining surplus to largest
// remaining deficit; with zero transfer loss the total cost depends only on
// the aggregate deficit and surplus, so the matching order is cosmetic.
inline std::pair<EnergyLedger, CostBreakdown> settle_sharing(const PowerProfile& q,
                                                             const Scenario& s) {
  const Tariff& t = s.tariff;
  if (!(t.contract_fee >= 0.0))
    throw std::invalid_argument("settle_sharing: contract_fee must be >= 0");
  const double keep = 1.0 - t.transfer_loss;  // fraction of an injected unit that arrives
  const NetLoad nl = net_load(q, s);
  EnergyLedger led = detail::empty_ledger(s.bs_count());
  led.contract_fee_paid = t.contract_fee;

  // (amount, id); ties broken toward the smaller BS id.
  using Entry = std::pair<double, int>;
  auto cmp = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> surplus(cmp), deficit(cmp);
  for (std::size_t i = 0; i < nl.per_bs_delta.size(); ++i) {
    const double d = nl.per_bs_delta[i];
    if (d < 0.0) surplus.push({-d, static_cast<int>(i)});
    if (d > 0.0) deficit.push({d, static_cast<int>(i)});
  }
  while (!surplus.empty() && !deficit.empty()) {
    auto [sur, si] = surplus.top();
    auto [def, di] = deficit.top();
    surplus.pop();
    deficit.pop();
    const double injected = std::min(sur, def / keep);
    const double drawn = injected * keep;
    if (injected <= 1e-15) break;
    led.transfers.push_back({si, di, injected});
    if (sur - injected > 1e-15) surplus.push({sur - injected, si});
    if (def - drawn > 1e-15) deficit.push({def - drawn, di});
  }
  // Whatever deficit remains unmatched is bought from the grid.
  std::vector<double> covered(s.bs_count(), 0.0);
  for (const auto& tr : led.transfers) covered[tr.to_bs] += tr.amount * keep;
  for (std::size_t i = 0; i < nl.per_bs_delta.size(); ++i) {
    const double d = nl.per_bs_delta[i];
    if (d > 0.0) led.grid_buy[i] = std::max(d - covered[i], 0.0);
  }
  return {led, detail::assemble(s, led)};
}

// Convex single-expression form of the trading cost; identical to the
// two-branch settlement for every input. Useful as an optimization objective
// and as a cross-check.
inline double trading_cost_reformulated(const PowerProfile& q, const Scenario& s) {
  const Tariff& t = s.tariff;
  const NetLoad nl = net_load(q, s);
  double signed_sum = 0.0;
  for (double d : nl.per_bs_delta) signed_sum += d;
  return (t.agg_buy_price - t.agg_sell_price) * nl.total_deficit +
         t.agg_sell_price * signed_sum +
         (t.grid_price - t.agg_buy_price) * std::max(signed_sum, 0.0);
}

// Post-cooperation renewable supply at each BS: harvested energy minus what
// was sold or sent away, plus what was bought from the aggregator or
// received through sharing. Grid purchases are not renewable and do not
// appear here.
inline std::vector<double> renewable_supply(const Scenario& s, const EnergyLedger& led) {
  std::vector<double> supply(s.bs_count());
  for (std::size_t i = 0; i < supply.size(); ++i)
    supply[i] = s.base_stations[i].harvest_rate - led.agg_sell[i] + led.agg_buy[i];
  const double keep = 1.0 - s.tariff.transfer_loss;
  for (const auto& tr : led.transfers) {
    supply[tr.from_bs] -= tr.amount;
    supply[tr.to_bs] += tr.amount * keep;
  }
  return supply;
}

}  // namespace greencoop
