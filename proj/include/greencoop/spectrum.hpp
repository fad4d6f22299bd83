// spectrum.hpp - cost-aware spectrum sharing between two base stations.
//
// A signed amount s of bandwidth moves from BS 0 to BS 1 (negative values
// flow the other way). Each BS then serves its own terminals over its
// effective band. The grid-cost objective is convex piecewise-smooth in s;
// the optimizer assembles candidates from the budget crossings (bisection),
// piecewise golden-section minima and the boundaries, then picks the best.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "greencoop/link.hpp"
#include "greencoop/model.hpp"
#include "greencoop/solvers.hpp"
#include "greencoop/tariff.hpp"

namespace greencoop {

struct SpectrumPartition {
  double shared_amount = 0.0;                // s, positive means BS 0 -> BS 1
  std::vector<double> effective_bandwidths;  // >= 0, sums to the total bandwidth
};

inline SpectrumPartition make_partition(const Scenario& s, double shared) {
  if (s.bs_count() != 2)
    throw unsupported_error("spectrum sharing is defined for exactly 2 base stations");
  SpectrumPartition part;
  part.shared_amount = shared;
  part.effective_bandwidths = {s.base_stations[0].bandwidth - shared,
                               s.base_stations[1].bandwidth + shared};
  return part;
}

inline PowerProfile spectrum_demand(const Scenario& s, const SpectrumPartition& part) {
  if (part.effective_bandwidths.size() != s.bs_count())
    throw std::invalid_argument("spectrum_demand: partition size mismatch");
  double total = 0.0;
  for (double w : part.effective_bandwidths) {
    if (w < 0.0) throw std::invalid_argument("spectrum_demand: negative effective bandwidth");
    total += w;
  }
  if (std::abs(total - s.total_bandwidth()) > 1e-9 * std::max(1.0, s.total_bandwidth()))
    throw std::invalid_argument("spectrum_demand: partition does not preserve total bandwidth");

  PowerProfile q;
  q.per_bs_power.assign(s.bs_count(), 0.0);
  for (std::size_t b = 0; b < s.bs_count(); ++b) {
    const auto mts = s.home_terminals(b);
    if (mts.empty()) continue;
    if (!(part.effective_bandwidths[b] > 0.0))
      throw infeasible_error("spectrum_demand: base station " + std::to_string(b) +
                             " has terminals but zero effective bandwidth");
    const double w = part.effective_bandwidths[b] / static_cast<double>(mts.size());
    double sum = 0.0;
    for (std::size_t m : mts)
      sum += awgn_power(s.terminals[m].min_rate, w, s.noise_density, s.channel.gain(b, m));
    q.per_bs_power[b] = sum;
  }
  return q;
}

struct SpectrumSolution {
  SpectrumPartition partition;
  PowerProfile profile;
  CostBreakdown cost;
};

namespace detail {

// Feasible interval for the shared amount. A donor that still serves
// terminals keeps a sliver of band; an empty BS may give everything away.
inline std::pair<double, double> sharing_domain(const Scenario& s) {
  const double w0 = s.base_stations[0].bandwidth;
  const double w1 = s.base_stations[1].bandwidth;
  const double margin = 1e-9 * (w0 + w1);
  const double lo = s.home_terminals(1).empty() ? -w1 : -w1 + margin;
  const double hi = s.home_terminals(0).empty() ? w0 : w0 - margin;
  return {lo, hi};
}

}  // namespace detail

inline SpectrumSolution optimize_spectrum_sharing(const Scenario& s, SolverConfig cfg = {}) {
  if (s.bs_count() != 2)
    throw unsupported_error("optimize_spectrum_sharing: exactly 2 base stations required");
  const auto [lo, hi] = detail::sharing_domain(s);
  const double pi = s.tariff.grid_price;

  const auto demand = [&](double sh) { return spectrum_demand(s, make_partition(s, sh)); };
  const auto objective = [&](double sh) {
    const NetLoad nl = net_load(demand(sh), s);
    return pi * nl.total_deficit;
  };

  std::vector<double> candidates = {0.0, lo, hi};
  // Budget crossings Q_i(s) = E_i bracket the kinks of the objective.
  for (std::size_t b = 0; b < 2; ++b) {
    const double e = s.base_stations[b].harvest_rate;
    const auto excess = [&](double sh) { return demand(sh).per_bs_power[b] - e; };
    if (excess(lo) * excess(hi) <= 0.0) candidates.push_back(bisect(excess, lo, hi, cfg));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  // Golden-section minima of each smooth convex piece, plus one over the
  // whole domain as a safety net for pieces the kink list missed.
  std::vector<double> segment_edges = candidates;
  for (std::size_t i = 0; i + 1 < segment_edges.size(); ++i)
    candidates.push_back(golden_min(objective, segment_edges[i], segment_edges[i + 1], cfg));
  candidates.push_back(golden_min(objective, lo, hi, cfg));

  bool have_best = false;
  double best_val = 0.0;
  double best_s = 0.0;
  for (double cand : candidates) {
    if (cand < lo || cand > hi) continue;
    const double val = objective(cand);
    if (!have_best) {
      have_best = true;
      best_val = val;
      best_s = cand;
      continue;
    }
    const double tie = 1e-12 * std::max(1.0, std::abs(best_val));
    // Ties prefer no sharing, then the smallest transfer.
    const bool better = val < best_val - tie;
    const bool tied = std::abs(val - best_val) <= tie;
    if (better || (tied && (std::abs(cand) < std::abs(best_s) - 1e-15 ||
                            (std::abs(std::abs(cand) - std::abs(best_s)) <= 1e-15 && cand < best_s)))) {
      best_val = val;
      best_s = cand;
    }
  }

  SpectrumSolution sol;
  sol.partition = make_partition(s, best_s);
  sol.profile = spectrum_demand(s, sol.partition);
  sol.cost = cost_baseline(sol.profile, s);
  return sol;
}

}  // namespace greencoop
