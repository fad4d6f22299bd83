// schemes.hpp - single-cooperation scheme runners and the dispatch that maps
// a scheme id onto its optimizer, packaging consumption, settlement ledger
// and cost into one record.
#pragma once

#include <utility>

#include "greencoop/comp.hpp"
#include "greencoop/joint.hpp"
#include "greencoop/link.hpp"
#include "greencoop/model.hpp"
#include "greencoop/offload.hpp"
#include "greencoop/scheme_result.hpp"
#include "greencoop/spectrum.hpp"
#include "greencoop/tariff.hpp"

namespace greencoop {

namespace detail {

inline SchemeResult grid_only_result(const Scenario& s, Scheme scheme, PowerProfile q) {
  SchemeResult res;
  res.scheme = scheme;
  res.consumption = std::move(q);
  res.ledger = baseline_ledger(res.consumption, s);
  res.cost = cost_baseline(res.consumption, s);
  res.renewable_supply = renewable_supply(s, res.ledger);
  return res;
}

}  // namespace detail

inline SchemeResult run_conventional(const Scenario& s) {
  return detail::grid_only_result(s, Scheme::conventional, conventional_demand(s));
}

inline SchemeResult run_trading(const Scenario& s) {
  SchemeResult res;
  res.scheme = Scheme::trading;
  res.consumption = conventional_demand(s);
  auto [ledger, cost] = settle_trading(res.consumption, s);
  res.ledger = std::move(ledger);
  res.cost = cost;
  res.renewable_supply = renewable_supply(s, res.ledger);
  return res;
}

inline SchemeResult run_sharing(const Scenario& s) {
  SchemeResult res;
  res.scheme = Scheme::sharing;
  res.consumption = conventional_demand(s);
  auto [ledger, cost] = settle_sharing(res.consumption, s);
  res.ledger = std::move(ledger);
  res.cost = cost;
  res.renewable_supply = renewable_supply(s, res.ledger);
  return res;
}

inline SchemeResult run_offload(const Scenario& s) {
  OffloadSolution sol = optimize_offloading(s);
  SchemeResult res = detail::grid_only_result(s, Scheme::offload, std::move(sol.profile));
  res.association = std::move(sol.association);
  return res;
}

inline SchemeResult run_spectrum(const Scenario& s, SolverConfig cfg = {}) {
  SpectrumSolution sol = optimize_spectrum_sharing(s, cfg);
  SchemeResult res = detail::grid_only_result(s, Scheme::spectrum, std::move(sol.profile));
  res.partition = std::move(sol.partition);
  return res;
}

inline SchemeResult run_comp(const Scenario& s, SolverConfig cfg = {}) {
  std::vector<PiecewisePrice> prices;
  prices.reserve(s.bs_count());
  for (const auto& bs : s.base_stations) prices.push_back(pure_grid_price(bs, s.tariff.grid_price));
  CompSolution sol = optimize_comp(s, prices, cfg);
  SchemeResult res = detail::grid_only_result(s, Scheme::comp, std::move(sol.profile));
  res.comp = std::move(sol.alloc);
  return res;
}

inline SchemeResult run_scheme(const Scenario& s, Scheme scheme, SolverConfig cfg = {}) {
  switch (scheme) {
    case Scheme::conventional: return run_conventional(s);
    case Scheme::trading: return run_trading(s);
    case Scheme::sharing: return run_sharing(s);
    case Scheme::offload: return run_offload(s);
    case Scheme::spectrum: return run_spectrum(s, cfg);
    case Scheme::comp: return run_comp(s, cfg);
    case Scheme::joint_energy_spectrum: return joint_energy_spectrum(s, cfg);
    case Scheme::joint_trading_comp: return joint_trading_comp(s, cfg);
    case Scheme::joint_sharing_comp: return joint_sharing_comp(s, cfg);
  }
  throw std::logic_error("run_scheme: unknown scheme");
}

}  // namespace greencoop
