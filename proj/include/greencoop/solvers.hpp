// solvers.hpp - scalar root finding, 1-D minimization and the weighted
// amplitude-split closed form used by the coordinated-transmission schemes.
//
// Everything here is deterministic: identical inputs give bit-identical
// outputs, and iteration caps fail loudly instead of returning garbage.
#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "greencoop/model.hpp"

namespace greencoop {

struct SolverConfig {
  double abs_tol = 1e-9;
  int max_iters = 200;
};

// Root of a sign-changing function on [lo, hi]; the bracket shrinks below
// cfg.abs_tol. Requires f(lo) and f(hi) to have opposite signs (or zero).
template <typename F>
double bisect(F&& f, double lo, double hi, SolverConfig cfg = {}) {
  if (!(lo <= hi)) throw std::invalid_argument("bisect: lo must not exceed hi");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0)
    throw std::invalid_argument("bisect: f(lo) and f(hi) have the same sign; no root bracketed");
  for (int i = 0; i < cfg.max_iters; ++i) {
    if (hi - lo <= cfg.abs_tol) return 0.5 * (lo + hi);
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if (flo * fmid < 0.0) {
      hi = mid;
      fhi = fmid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  throw solver_error("bisect: interval still wider than abs_tol after max_iters iterations");
}

// Argmin of a unimodal function on [lo, hi] by golden-section search.
// Unimodality is the caller's responsibility. The returned point is within
// cfg.abs_tol of the bracket found and its value never exceeds f(lo), f(hi).
template <typename F>
double golden_min(F&& f, double lo, double hi, SolverConfig cfg = {}) {
  if (!(lo <= hi)) throw std::invalid_argument("golden_min: lo must not exceed hi");
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int iters = 0;
  while (b - a > cfg.abs_tol) {
    if (++iters > cfg.max_iters)
      throw solver_error("golden_min: bracket still wider than abs_tol after max_iters");
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  // Guard the endpoints so the contract "value <= f(lo), f(hi)" holds even
  // when the minimum sits exactly on the boundary.
  double best = 0.5 * (a + b);
  double fbest = f(best);
  if (f(lo) <= fbest) {
    best = lo;
    fbest = f(lo);
  }
  if (f(hi) < fbest) best = hi;
  return best;
}

// Minimum-cost power split for one coherently combined link:
//   minimize sum_i c_i * p_i  subject to  (sum_i sqrt(g_i * p_i))^2 >= target.
// KKT gives amplitudes proportional to g_i / c_i; the minimum cost is
// target / sum_i (g_i / c_i). Zero-gain entries get zero power.
inline std::vector<double> weighted_split(std::span<const double> costs,
                                          std::span<const double> gains, double target) {
  if (costs.size() != gains.size())
    throw std::invalid_argument("weighted_split: costs and gains must have equal length");
  if (target < 0.0) throw std::invalid_argument("weighted_split: target must be >= 0");
  std::vector<double> powers(costs.size(), 0.0);
  if (target == 0.0) return powers;
  double ratio_sum = 0.0;
  for (std::size_t i = 0; i < costs.size(); ++i) {
    if (!(costs[i] > 0.0)) throw std::invalid_argument("weighted_split: costs must be > 0");
    if (gains[i] < 0.0) throw std::invalid_argument("weighted_split: gains must be >= 0");
    ratio_sum += gains[i] / costs[i];
  }
  if (ratio_sum == 0.0)
    throw infeasible_error("weighted_split: all gains are zero but target is positive");
  for (std::size_t i = 0; i < costs.size(); ++i) {
    if (gains[i] == 0.0) continue;
    const double amplitude = std::sqrt(target) * (gains[i] / costs[i]) / ratio_sum;
    powers[i] = amplitude * amplitude / gains[i];
  }
  return powers;
}

inline double weighted_split_cost(std::span<const double> costs, std::span<const double> gains,
                                  double target) {
  double ratio_sum = 0.0;
  for (std::size_t i = 0; i < costs.size(); ++i) ratio_sum += gains[i] / costs[i];
  if (ratio_sum == 0.0) {
    if (target == 0.0) return 0.0;
    throw infeasible_error("weighted_split_cost: all gains are zero but target is positive");
  }
  return target / ratio_sum;
}

}  // namespace greencoop
