// joint.hpp - the three joint supply/demand cooperation schemes: energy
// sharing combined with spectrum sharing, aggregator trading combined with
// CoMP, and aggregator sharing combined with CoMP.
#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "greencoop/comp.hpp"
#include "greencoop/link.hpp"
#include "greencoop/model.hpp"
#include "greencoop/scheme_result.hpp"
#include "greencoop/solvers.hpp"
#include "greencoop/spectrum.hpp"
#include "greencoop/tariff.hpp"

namespace greencoop {

// Spectrum moves between the two stations while their renewable energy is
// pooled through the sharing contract. The sharing cost depends only on the
// total consumption, so the search is one-dimensional: either the strictly
// convex total-power minimum (when the pool cannot cover it) or the point
// nearest no-sharing inside the region the pool does cover.
inline SchemeResult joint_energy_spectrum(const Scenario& s, SolverConfig cfg = {}) {
  if (s.bs_count() != 2)
    throw unsupported_error("joint_energy_spectrum: exactly 2 base stations required");
  const auto [lo, hi] = detail::sharing_domain(s);
  const auto total_power = [&](double sh) {
    const PowerProfile q = spectrum_demand(s, make_partition(s, sh));
    return q.per_bs_power[0] + q.per_bs_power[1];
  };
  double total_harvest = 0.0;
  for (const auto& bs : s.base_stations) total_harvest += bs.harvest_rate;

  const double s_min = golden_min(total_power, lo, hi, cfg);
  double chosen = s_min;
  if (total_power(s_min) < total_harvest) {
    // Flat-cost region: every partition whose total demand fits the pooled
    // harvest costs exactly the contract fee. Prefer no sharing, else the
    // boundary of the region nearest zero.
    if (total_power(0.0) <= total_harvest) {
      chosen = 0.0;
    } else {
      const auto excess = [&](double sh) { return total_power(sh) - total_harvest; };
      const double a = std::min(0.0, s_min);
      const double b = std::max(0.0, s_min);
      chosen = bisect(excess, a, b, cfg);
    }
  }

  SchemeResult res;
  res.scheme = Scheme::joint_energy_spectrum;
  res.partition = make_partition(s, chosen);
  res.consumption = spectrum_demand(s, *res.partition);
  auto [ledger, cost] = settle_sharing(res.consumption, s);
  res.ledger = std::move(ledger);
  res.cost = cost;
  res.renewable_supply = renewable_supply(s, res.ledger);
  return res;
}

// Minimum-total-power CoMP (equal-weight amplitude split per sub-band) with
// all renewable energy pooled through the sharing contract.
inline SchemeResult joint_sharing_comp(const Scenario& s, SolverConfig cfg = {}) {
  std::vector<PiecewisePrice> uniform(s.bs_count());
  for (std::size_t i = 0; i < s.bs_count(); ++i)
    uniform[i] = {0.0, s.tariff.grid_price, s.tariff.grid_price};
  const CompSolution sol = optimize_comp(s, uniform, cfg);

  SchemeResult res;
  res.scheme = Scheme::joint_sharing_comp;
  res.comp = sol.alloc;
  res.consumption = sol.profile;
  auto [ledger, cost] = settle_sharing(res.consumption, s);
  res.ledger = std::move(ledger);
  res.cost = cost;
  res.renewable_supply = renewable_supply(s, res.ledger);
  return res;
}

namespace detail {

inline std::vector<PiecewisePrice> trading_prices(const Scenario& s, double aggregate_dual) {
  std::vector<PiecewisePrice> prices(s.bs_count());
  for (std::size_t i = 0; i < s.bs_count(); ++i)
    prices[i] = {s.base_stations[i].harvest_rate, s.tariff.agg_sell_price + aggregate_dual,
                 s.tariff.agg_buy_price + aggregate_dual};
  return prices;
}

inline SchemeResult finish_trading_result(const Scenario& s, const CompSolution& sol) {
  SchemeResult res;
  res.scheme = Scheme::joint_trading_comp;
  res.comp = sol.alloc;
  res.consumption = sol.profile;
  auto [ledger, cost] = settle_trading(res.consumption, s);
  res.ledger = std::move(ledger);
  res.cost = cost;
  res.renewable_supply = renewable_supply(s, res.ledger);
  return res;
}

}  // namespace detail

// Full joint optimization of aggregator trading and CoMP transmission.
//
// The trading cost is convex in the consumption vector: per-BS two-piece
// terms with slopes agg_sell/agg_buy around the harvest, plus an aggregate
// term (grid - agg_buy) * [sum of net loads]+ that models the purchase quota.
// Dualizing the aggregate term with multiplier mu turns the inner problem
// into a CoMP solve at shifted per-BS prices; the aggregate net load is
// nonincreasing in mu, so an outer bisection pins it. The returned ledger
// and cost always come from an exact trading settlement of the final
// consumption vector.
inline SchemeResult joint_trading_comp(const Scenario& s, SolverConfig cfg = {}) {
  const Tariff& t = s.tariff;
  if (!(t.agg_sell_price > 0.0 && t.agg_sell_price < t.agg_buy_price &&
        t.agg_buy_price < t.grid_price))
    throw std::invalid_argument(
        "joint_trading_comp: tariff must satisfy 0 < agg_sell < agg_buy < grid_price");

  const auto net_sum = [&](const CompSolution& sol) {
    double acc = 0.0;
    for (std::size_t i = 0; i < s.bs_count(); ++i)
      acc += sol.profile.per_bs_power[i] - s.base_stations[i].harvest_rate;
    return acc;
  };
  const auto solve_at = [&](double mu) { return optimize_comp(s, detail::trading_prices(s, mu), cfg); };

  const double mu_max = t.grid_price - t.agg_buy_price;
  CompSolution low = solve_at(0.0);
  if (net_sum(low) <= 0.0) return detail::finish_trading_result(s, low);
  CompSolution high = solve_at(mu_max);
  if (net_sum(high) >= 0.0) return detail::finish_trading_result(s, high);

  // Aggregate net load crosses zero inside (0, mu_max); bisect on mu and
  // keep whichever bracket end settles cheaper.
  double lo = 0.0, hi = mu_max;
  for (int i = 0; i < cfg.max_iters && hi - lo > cfg.abs_tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const CompSolution sol = solve_at(mid);
    if (net_sum(sol) > 0.0) {
      lo = mid;
      low = sol;
    } else {
      hi = mid;
      high = sol;
    }
  }
  SchemeResult a = detail::finish_trading_result(s, low);
  SchemeResult b = detail::finish_trading_result(s, high);
  return a.cost.total <= b.cost.total ? a : b;
}

// Reproduction path: every BS is pinned to one of the two aggregator prices
// (seller at agg_sell, buyer at agg_buy) and the per-sub-band closed form is
// evaluated at those fixed prices. Assignments are kept only when
// self-consistent (sellers end at/below their harvest, buyers at/above);
// the cheapest consistent assignment wins. This is the classical fixed-price
// stationary point; the full optimizer can only improve on it.
inline SchemeResult joint_trading_comp_fixed_price(const Scenario& s, SolverConfig cfg = {}) {
  const Tariff& t = s.tariff;
  if (!(t.agg_sell_price > 0.0 && t.agg_sell_price < t.agg_buy_price &&
        t.agg_buy_price < t.grid_price))
    throw std::invalid_argument(
        "joint_trading_comp_fixed_price: tariff ordering 0 < agg_sell < agg_buy < grid required");
  const std::size_t n = s.bs_count();
  if (n > 16)
    throw unsupported_error("joint_trading_comp_fixed_price: regime enumeration is limited to 16 "
                            "base stations");

  bool found_consistent = false;
  bool found_any = false;
  double best_total = 0.0;
  CompSolution best_sol;

  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<PiecewisePrice> prices(n);
    for (std::size_t i = 0; i < n; ++i) {
      const bool buyer = (mask >> i) & 1u;
      const double price = buyer ? t.agg_buy_price : t.agg_sell_price;
      prices[i] = {s.base_stations[i].harvest_rate, price, price};
    }
    CompSolution sol = optimize_comp(s, prices, cfg);
    bool consistent = true;
    for (std::size_t i = 0; i < n; ++i) {
      const double q = sol.profile.per_bs_power[i];
      const double e = s.base_stations[i].harvest_rate;
      const double tol = 1e-9 * std::max(1.0, e);
      const bool buyer = (mask >> i) & 1u;
      if (buyer ? (q < e - tol) : (q > e + tol)) {
        consistent = false;
        break;
      }
    }
    const double total = settle_trading(sol.profile, s).second.total;
    const bool take = !found_any || (consistent && !found_consistent) ||
                      (consistent == found_consistent && total < best_total - 1e-12);
    if (take) {
      found_any = true;
      found_consistent = found_consistent || consistent;
      best_total = total;
      best_sol = sol;
    }
  }

  SchemeResult res = detail::finish_trading_result(s, best_sol);
  res.notes.push_back("fixed seller/buyer marginal-price point");
  return res;
}

}  // namespace greencoop
