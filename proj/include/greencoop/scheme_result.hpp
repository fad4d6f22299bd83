// scheme_result.hpp - common result record for every cooperation scheme.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "greencoop/comp.hpp"
#include "greencoop/model.hpp"
#include "greencoop/offload.hpp"
#include "greencoop/spectrum.hpp"
#include "greencoop/tariff.hpp"

namespace greencoop {

enum class Scheme {
  conventional,
  trading,
  sharing,
  offload,
  spectrum,
  comp,
  joint_energy_spectrum,
  joint_trading_comp,
  joint_sharing_comp,
};

inline const std::vector<Scheme>& all_schemes() {
  static const std::vector<Scheme> v = {
      Scheme::conventional,        Scheme::trading,
      Scheme::sharing,             Scheme::offload,
      Scheme::spectrum,            Scheme::comp,
      Scheme::joint_energy_spectrum, Scheme::joint_trading_comp,
      Scheme::joint_sharing_comp,
  };
  return v;
}

inline std::string scheme_id(Scheme s) {
  switch (s) {
    case Scheme::conventional: return "conventional";
    case Scheme::trading: return "trading";
    case Scheme::sharing: return "sharing";
    case Scheme::offload: return "offload";
    case Scheme::spectrum: return "spectrum";
    case Scheme::comp: return "comp";
    case Scheme::joint_energy_spectrum: return "joint-energy-spectrum";
    case Scheme::joint_trading_comp: return "joint-trading-comp";
    case Scheme::joint_sharing_comp: return "joint-sharing-comp";
  }
  throw std::logic_error("scheme_id: unknown scheme");
}

inline std::string scheme_label(Scheme s) {
  switch (s) {
    case Scheme::conventional: return "conventional (no cooperation)";
    case Scheme::trading: return "energy cooperation: aggregator trading";
    case Scheme::sharing: return "energy cooperation: aggregator sharing";
    case Scheme::offload: return "communication cooperation: traffic offloading";
    case Scheme::spectrum: return "communication cooperation: spectrum sharing";
    case Scheme::comp: return "communication cooperation: CoMP";
    case Scheme::joint_energy_spectrum: return "joint energy and spectrum sharing";
    case Scheme::joint_trading_comp: return "joint energy trading and CoMP";
    case Scheme::joint_sharing_comp: return "joint energy sharing and CoMP";
  }
  throw std::logic_error("scheme_label: unknown scheme");
}

inline Scheme scheme_from_id(const std::string& id) {
  for (Scheme s : all_schemes())
    if (scheme_id(s) == id) return s;
  throw std::invalid_argument("unknown scheme id: " + id);
}

struct SchemeResult {
  Scheme scheme = Scheme::conventional;
  PowerProfile consumption;
  std::vector<double> renewable_supply;  // post-cooperation supply per BS
  EnergyLedger ledger;
  CostBreakdown cost;
  std::optional<SpectrumPartition> partition;
  std::optional<CompAllocation> comp;
  std::optional<Association> association;
  std::vector<std::string> notes;
};

}  // namespace greencoop
