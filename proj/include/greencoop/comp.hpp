// comp.hpp - coordinated multi-point transmission as a cost minimizer.
//
// All terminals form one cluster; the union of the BS bands is split equally
// into one sub-band per terminal, and every BS transmits coherently in every
// sub-band. Received power under coherent amplitude combining is
// (sum_i sqrt(g_i * p_i))^2, which must reach the target implied by the
// AWGN law for the terminal's rate.
//
// The optimizer minimizes sum_i f_i(Q_i) for convex two-piece linear f_i
// (slope_below up to the breakpoint, slope_above beyond). It runs a
// coordinate fixed point on per-BS marginal prices lambda_i: a BS is either
// pinned at one of its two slopes or budget-tight with lambda found by
// bisection; given lambda, each sub-band has the weighted-split closed form.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "greencoop/link.hpp"
#include "greencoop/model.hpp"
#include "greencoop/solvers.hpp"

namespace greencoop {

struct PiecewisePrice {
  double breakpoint = 0.0;   // usually the BS's harvest rate
  double slope_below = 0.0;  // marginal cost of energy under the breakpoint
  double slope_above = 0.0;  // marginal cost beyond; must be >= slope_below

  double cost(double q) const {
    return slope_below * std::min(q, breakpoint) + slope_above * std::max(q - breakpoint, 0.0);
  }
};

inline PiecewisePrice pure_grid_price(const BaseStation& bs, double grid_price) {
  return {bs.harvest_rate, 0.0, grid_price};
}

struct CompPlan {
  double sub_band_width = 0.0;
  std::vector<int> mt_of_subband;  // one terminal per sub-band, ascending id
  std::vector<double> target;      // required received power per sub-band
};

struct CompAllocation {
  double sub_band_width = 0.0;
  std::vector<int> mt_of_subband;
  std::vector<std::vector<double>> power;  // power[bs][subband]

  std::vector<double> per_bs_total() const {
    std::vector<double> q(power.size(), 0.0);
    for (std::size_t b = 0; b < power.size(); ++b)
      for (double p : power[b]) q[b] += p;  // fixed summation order over sub-band id
    return q;
  }
};

struct CompSolution {
  CompAllocation alloc;
  PowerProfile profile;
  std::vector<double> duals;  // final per-BS marginal prices
  double objective = 0.0;
};

inline CompPlan comp_plan(const Scenario& s) {
  CompPlan plan;
  if (s.mt_count() == 0) return plan;
  plan.sub_band_width = s.total_bandwidth() / static_cast<double>(s.mt_count());
  if (!(plan.sub_band_width > 0.0))
    throw infeasible_error("comp_plan: no bandwidth available for the cluster");
  for (std::size_t m = 0; m < s.mt_count(); ++m) {
    plan.mt_of_subband.push_back(static_cast<int>(m));
    plan.target.push_back(comp_target(s.terminals[m].min_rate, plan.sub_band_width, s.noise_density));
  }
  return plan;
}

inline double comp_received_power(const Scenario& s, const CompAllocation& alloc, std::size_t k) {
  double amplitude = 0.0;
  const std::size_t mt = static_cast<std::size_t>(alloc.mt_of_subband[k]);
  for (std::size_t b = 0; b < alloc.power.size(); ++b)
    amplitude += std::sqrt(s.channel.gain(b, mt) * alloc.power[b][k]);
  return amplitude * amplitude;
}

namespace detail {

// Lagrangian argmin for one sub-band at the given prices. A price of zero
// means free energy: the zero-priced stations take the whole load, split
// among themselves at equal weights (the minimum-total-power choice); the
// closed form is never evaluated with a zero price.
inline void allocate_subband(const Scenario& s, std::size_t mt, double target,
                             const std::vector<double>& lambda, std::vector<double>& out) {
  const std::size_t n = s.bs_count();
  out.assign(n, 0.0);
  if (target <= 0.0) return;
  std::vector<std::size_t> reach;
  for (std::size_t b = 0; b < n; ++b)
    if (s.channel.gain(b, mt) > 0.0) reach.push_back(b);
  if (reach.empty())
    throw infeasible_error("comp: no base station has positive gain to terminal " +
                           std::to_string(mt));
  std::vector<std::size_t> free_bs;
  for (std::size_t b : reach)
    if (lambda[b] <= 0.0) free_bs.push_back(b);
  const auto& members = free_bs.empty() ? reach : free_bs;
  std::vector<double> costs, gains;
  costs.reserve(members.size());
  gains.reserve(members.size());
  for (std::size_t b : members) {
    costs.push_back(free_bs.empty() ? lambda[b] : 1.0);
    gains.push_back(s.channel.gain(b, mt));
  }
  const std::vector<double> split = weighted_split(costs, gains, target);
  for (std::size_t j = 0; j < members.size(); ++j)
    out[members[j]] = split[j] < kPowerClampEpsilon ? 0.0 : split[j];
}

inline std::vector<std::vector<double>> allocate_all(const Scenario& s, const CompPlan& plan,
                                                     const std::vector<double>& lambda) {
  std::vector<std::vector<double>> power(s.bs_count(),
                                         std::vector<double>(plan.mt_of_subband.size(), 0.0));
  std::vector<double> band(s.bs_count());
  for (std::size_t k = 0; k < plan.mt_of_subband.size(); ++k) {
    allocate_subband(s, static_cast<std::size_t>(plan.mt_of_subband[k]), plan.target[k], lambda,
                     band);
    for (std::size_t b = 0; b < s.bs_count(); ++b) power[b][k] = band[b];
  }
  return power;
}

inline double bs_load(const Scenario& s, const CompPlan& plan, const std::vector<double>& lambda,
                      std::size_t bs) {
  double q = 0.0;
  std::vector<double> band(s.bs_count());
  for (std::size_t k = 0; k < plan.mt_of_subband.size(); ++k) {
    allocate_subband(s, static_cast<std::size_t>(plan.mt_of_subband[k]), plan.target[k], lambda,
                     band);
    q += band[bs];
  }
  return q;
}

}  // namespace detail

inline CompSolution optimize_comp(const Scenario& s, const std::vector<PiecewisePrice>& prices,
                                  SolverConfig cfg = {}) {
  const std::size_t n = s.bs_count();
  if (prices.size() != n)
    throw std::invalid_argument("optimize_comp: one price model per base station required");
  for (const auto& pr : prices)
    if (pr.slope_below > pr.slope_above || pr.slope_below < 0.0)
      throw std::invalid_argument("optimize_comp: price slopes must satisfy 0 <= below <= above");

  const CompPlan plan = comp_plan(s);
  std::vector<double> lambda(n);
  for (std::size_t i = 0; i < n; ++i) lambda[i] = prices[i].slope_above;

  if (!plan.mt_of_subband.empty()) {
    const auto respond = [&](std::size_t i) {
      const double lo = prices[i].slope_below;
      const double hi = prices[i].slope_above;
      const double budget = prices[i].breakpoint;
      const double tol = 1e-9 * std::max(1.0, std::abs(budget));
      std::vector<double> trial = lambda;
      trial[i] = hi;
      if (detail::bs_load(s, plan, trial, i) >= budget - tol) return hi;
      trial[i] = lo;
      if (detail::bs_load(s, plan, trial, i) <= budget + tol) return lo;
      return bisect(
          [&](double l) {
            trial[i] = l;
            return detail::bs_load(s, plan, trial, i) - budget;
          },
          lo, hi, cfg);
    };
    const int max_sweeps = 200;
    const double sweep_tol = 4.0 * cfg.abs_tol;
    int sweep = 0;
    for (;; ++sweep) {
      if (sweep >= max_sweeps)
        throw solver_error("optimize_comp: marginal prices did not stabilize");
      double max_delta = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double next = respond(i);
        max_delta = std::max(max_delta, std::abs(next - lambda[i]));
        lambda[i] = next;
      }
      if (max_delta <= sweep_tol) break;
    }
  }

  CompSolution sol;
  sol.alloc.sub_band_width = plan.sub_band_width;
  sol.alloc.mt_of_subband = plan.mt_of_subband;
  sol.alloc.power = detail::allocate_all(s, plan, lambda);
  sol.profile.per_bs_power = sol.alloc.per_bs_total();
  sol.duals = lambda;
  for (std::size_t i = 0; i < n; ++i) sol.objective += prices[i].cost(sol.profile.per_bs_power[i]);
  return sol;
}

// Largest KKT violation of a solution: stationarity (the allocation must
// equal the closed-form split at the final prices), primal QoS feasibility,
// and complementary slackness of the budget duals. Used by tests; a correct
// solve stays below 1e-6.
inline double comp_kkt_residual(const Scenario& s, const std::vector<PiecewisePrice>& prices,
                                const CompSolution& sol) {
  double residual = 0.0;
  const CompPlan plan = comp_plan(s);
  const auto recomputed = detail::allocate_all(s, plan, sol.duals);
  for (std::size_t b = 0; b < recomputed.size(); ++b)
    for (std::size_t k = 0; k < recomputed[b].size(); ++k)
      residual = std::max(residual, std::abs(recomputed[b][k] - sol.alloc.power[b][k]));
  for (std::size_t k = 0; k < plan.target.size(); ++k)
    residual = std::max(residual, plan.target[k] - comp_received_power(s, sol.alloc, k));
  for (std::size_t i = 0; i < s.bs_count(); ++i) {
    const double q = sol.profile.per_bs_power[i];
    const double budget = prices[i].breakpoint;
    const double lam = sol.duals[i];
    const double span = prices[i].slope_above - prices[i].slope_below;
    if (span <= 0.0) continue;  // uniform price: any load is consistent
    if (lam <= prices[i].slope_below + 1e-6 * span)
      residual = std::max(residual, q - budget);  // cheap-slope regime: at or below budget
    else if (lam >= prices[i].slope_above - 1e-6 * span)
      residual = std::max(residual, budget - q);  // expensive-slope regime: at or above budget
    else
      residual = std::max(residual, std::abs(q - budget));  // interior dual: budget tight
  }
  return residual;
}

}  // namespace greencoop
