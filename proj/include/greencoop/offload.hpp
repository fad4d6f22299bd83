// offload.hpp - cost-aware traffic offloading: reassociate terminals to
// neighboring stations so that cheap renewable energy absorbs more of the
// load. Small instances are solved exhaustively; larger ones by a
// deterministic steepest-descent single-move local search from the home
// association.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "greencoop/link.hpp"
#include "greencoop/model.hpp"
#include "greencoop/tariff.hpp"

namespace greencoop {

struct Association {
  std::vector<int> serving_bs;  // indexed by terminal id
};

inline Association home_association(const Scenario& s) {
  Association a;
  a.serving_bs.reserve(s.mt_count());
  for (const auto& mt : s.terminals) a.serving_bs.push_back(mt.home_bs);
  return a;
}

// Per-BS demand under an association: each BS equal-splits its own band
// among the terminals currently attached to it and serves each at its
// minimum rate through the association's gain.
inline PowerProfile offload_demand(const Scenario& s, const Association& assoc) {
  if (assoc.serving_bs.size() != s.mt_count())
    throw std::invalid_argument("offload_demand: association size mismatch");
  std::vector<std::vector<std::size_t>> attached(s.bs_count());
  for (std::size_t m = 0; m < assoc.serving_bs.size(); ++m) {
    const int b = assoc.serving_bs[m];
    if (b < 0 || static_cast<std::size_t>(b) >= s.bs_count())
      throw std::invalid_argument("offload_demand: terminal " + std::to_string(m) +
                                  " assigned to unknown base station");
    attached[static_cast<std::size_t>(b)].push_back(m);
  }
  PowerProfile q;
  q.per_bs_power.assign(s.bs_count(), 0.0);
  for (std::size_t b = 0; b < s.bs_count(); ++b) {
    if (attached[b].empty()) continue;
    const double w = s.base_stations[b].bandwidth / static_cast<double>(attached[b].size());
    double sum = 0.0;
    for (std::size_t m : attached[b])
      sum += awgn_power(s.terminals[m].min_rate, w, s.noise_density, s.channel.gain(b, m));
    q.per_bs_power[b] = sum;
  }
  return q;
}

struct OffloadSolution {
  Association association;
  PowerProfile profile;
  CostBreakdown cost;
};

// Candidate space above which exhaustive enumeration gives way to local
// search.
inline constexpr std::uint64_t kOffloadExhaustiveLimit = 200000;

inline OffloadSolution optimize_offloading(const Scenario& s) {
  // Candidate stations per terminal: positive gain only, ascending id.
  std::vector<std::vector<int>> candidates(s.mt_count());
  for (std::size_t m = 0; m < s.mt_count(); ++m) {
    for (std::size_t b = 0; b < s.bs_count(); ++b)
      if (s.channel.gain(b, m) > 0.0) candidates[m].push_back(static_cast<int>(b));
    if (candidates[m].empty())
      throw infeasible_error("optimize_offloading: terminal " + std::to_string(m) +
                             " has zero gain to every base station");
  }

  const auto cost_of = [&](const Association& a) { return cost_baseline(offload_demand(s, a), s).total; };

  std::uint64_t combos = 1;
  bool exhaustive = true;
  for (const auto& c : candidates) {
    combos *= c.size();
    if (combos > kOffloadExhaustiveLimit) {
      exhaustive = false;
      break;
    }
  }

  Association best = home_association(s);
  // Terminals whose home link is dead start at their first usable station.
  for (std::size_t m = 0; m < s.mt_count(); ++m)
    if (s.channel.gain(static_cast<std::size_t>(best.serving_bs[m]), m) <= 0.0)
      best.serving_bs[m] = candidates[m].front();
  double best_cost = cost_of(best);

  if (exhaustive && s.mt_count() > 0) {
    // Enumerate in lexicographic order of the assignment vector; keeping the
    // first of any cost tie makes the result the lexicographically smallest
    // optimum.
    std::vector<std::size_t> idx(s.mt_count(), 0);
    Association cur;
    cur.serving_bs.resize(s.mt_count());
    bool seeded = false;
    for (;;) {
      for (std::size_t m = 0; m < s.mt_count(); ++m) cur.serving_bs[m] = candidates[m][idx[m]];
      const double c = cost_of(cur);
      if (!seeded || c < best_cost - 1e-15) {
        seeded = true;
        best_cost = c;
        best = cur;
      }
      std::size_t pos = idx.size();
      while (pos > 0) {
        if (++idx[pos - 1] < candidates[pos - 1].size()) break;
        idx[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  } else {
    // Steepest single-terminal move, ties broken by terminal then BS id.
    const std::size_t max_moves = 10 * s.mt_count() * s.bs_count() + 10;
    for (std::size_t moves = 0; moves < max_moves; ++moves) {
      double best_gain = 1e-12;
      std::size_t move_mt = 0;
      int move_bs = -1;
      for (std::size_t m = 0; m < s.mt_count(); ++m) {
        for (int b : candidates[m]) {
          if (b == best.serving_bs[m]) continue;
          Association trial = best;
          trial.serving_bs[m] = b;
          const double gain = best_cost - cost_of(trial);
          if (gain > best_gain) {
            best_gain = gain;
            move_mt = m;
            move_bs = b;
          }
        }
      }
      if (move_bs < 0) break;
      best.serving_bs[move_mt] = move_bs;
      best_cost = cost_of(best);
    }
  }

  OffloadSolution sol;
  sol.association = std::move(best);
  sol.profile = offload_demand(s, sol.association);
  sol.cost = cost_baseline(sol.profile, s);
  return sol;
}

}  // namespace greencoop
