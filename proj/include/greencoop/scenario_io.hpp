// scenario_io.hpp - scenario file parsing, emission and seeded generation.
//
// A scenario file is a JSON document:
//   {
//     "base_stations": [ {"harvest_rate": 10.0, "bandwidth": 10.0}, ... ],
//     "terminals":     [ {"home_bs": 0, "min_rate": 1.0}, ... ],
//     "channel": { "mode": "deterministic-average" | "seeded-random",
//                  "average_gains": {"own": 1.0, "cross": 0.6},   (deterministic)
//                  "seed": 7 },                                   (seeded)
//     "noise_density": 1.0,
//     "tariff": { "grid_price": 1.0, "agg_buy": 0.5, "agg_sell": 0.4,
//                 "contract_fee": 0.1, "transfer_loss": 0.0 }
//   }
// Unknown keys are rejected so typos cannot silently change a run.
#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "greencoop/model.hpp"

namespace greencoop {

class parse_error : public error {
 public:
  using error::error;
};

class validation_error : public error {
 public:
  validation_error(std::string msg, ValidationReport rep)
      : error(std::move(msg)), report(std::move(rep)) {}
  ValidationReport report;
};

namespace detail {

using json = nlohmann::ordered_json;

inline void check_keys(const json& obj, const std::string& where,
                       const std::vector<std::string>& required,
                       const std::vector<std::string>& optional = {}) {
  if (!obj.is_object()) throw parse_error(where + ": expected an object");
  for (const auto& key : required)
    if (!obj.contains(key)) throw parse_error(where + ": missing required key '" + key + "'");
  for (const auto& item : obj.items()) {
    const auto& k = item.key();
    const bool known = std::find(required.begin(), required.end(), k) != required.end() ||
                       std::find(optional.begin(), optional.end(), k) != optional.end();
    if (!known) throw parse_error(where + ": unknown key '" + k + "'");
  }
}

inline double require_number(const json& obj, const std::string& where, const std::string& key) {
  const auto& v = obj.at(key);
  if (!v.is_number()) throw parse_error(where + ": '" + key + "' must be a number");
  return v.get<double>();
}

inline std::string line_of_offset(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return std::to_string(line);
}

}  // namespace detail

inline Scenario parse_scenario_text(const std::string& text, const std::string& origin) {
  using detail::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(origin + ": line " + detail::line_of_offset(text, e.byte) + ": " + e.what());
  }
  detail::check_keys(doc, origin,
                     {"base_stations", "terminals", "channel", "noise_density", "tariff"});

  Scenario s;
  const auto& bss = doc.at("base_stations");
  if (!bss.is_array()) throw parse_error(origin + ": 'base_stations' must be an array");
  for (std::size_t i = 0; i < bss.size(); ++i) {
    const std::string where = origin + ": base_stations[" + std::to_string(i) + "]";
    detail::check_keys(bss[i], where, {"harvest_rate", "bandwidth"});
    BaseStation bs;
    bs.id = static_cast<int>(i);
    bs.harvest_rate = detail::require_number(bss[i], where, "harvest_rate");
    bs.bandwidth = detail::require_number(bss[i], where, "bandwidth");
    s.base_stations.push_back(bs);
  }

  const auto& mts = doc.at("terminals");
  if (!mts.is_array()) throw parse_error(origin + ": 'terminals' must be an array");
  for (std::size_t m = 0; m < mts.size(); ++m) {
    const std::string where = origin + ": terminals[" + std::to_string(m) + "]";
    detail::check_keys(mts[m], where, {"home_bs", "min_rate"});
    MobileTerminal mt;
    mt.id = static_cast<int>(m);
    if (!mts[m].at("home_bs").is_number_integer())
      throw parse_error(where + ": 'home_bs' must be an integer");
    mt.home_bs = mts[m].at("home_bs").get<int>();
    mt.min_rate = detail::require_number(mts[m], where, "min_rate");
    s.terminals.push_back(mt);
  }

  std::vector<int> home;
  home.reserve(s.terminals.size());
  for (const auto& mt : s.terminals) home.push_back(mt.home_bs);
  // Channel expansion needs valid home indices; anything else is reported
  // through the normal validation path below.
  bool homes_ok = true;
  for (int h : home)
    if (h < 0 || static_cast<std::size_t>(h) >= s.base_stations.size()) homes_ok = false;

  const auto& ch = doc.at("channel");
  const std::string chwhere = origin + ": channel";
  if (!ch.is_object() || !ch.contains("mode") || !ch.at("mode").is_string())
    throw parse_error(chwhere + ": requires a string 'mode'");
  const std::string mode = ch.at("mode").get<std::string>();
  double own = 1.0, cross = 0.6;
  if (ch.contains("average_gains")) {
    const std::string gwhere = chwhere + ".average_gains";
    detail::check_keys(ch.at("average_gains"), gwhere, {"own", "cross"});
    own = detail::require_number(ch.at("average_gains"), gwhere, "own");
    cross = detail::require_number(ch.at("average_gains"), gwhere, "cross");
  }
  if (mode == "deterministic-average") {
    detail::check_keys(ch, chwhere, {"mode", "average_gains"});
    if (homes_ok)
      s.channel = ChannelMatrix::deterministic(s.base_stations.size(), home, own, cross);
  } else if (mode == "seeded-random") {
    detail::check_keys(ch, chwhere, {"mode", "seed"}, {"average_gains"});
    if (!ch.at("seed").is_number_unsigned() && !ch.at("seed").is_number_integer())
      throw parse_error(chwhere + ": 'seed' must be an integer");
    const auto seed = ch.at("seed").get<std::uint64_t>();
    if (homes_ok)
      s.channel = ChannelMatrix::seeded(s.base_stations.size(), home, own, cross, seed);
  } else {
    throw parse_error(chwhere + ": mode must be 'deterministic-average' or 'seeded-random'");
  }

  if (!doc.at("noise_density").is_number())
    throw parse_error(origin + ": 'noise_density' must be a number");
  s.noise_density = doc.at("noise_density").get<double>();

  const auto& tj = doc.at("tariff");
  const std::string twhere = origin + ": tariff";
  detail::check_keys(tj, twhere, {"grid_price", "agg_buy", "agg_sell", "contract_fee"},
                     {"transfer_loss"});
  s.tariff.grid_price = detail::require_number(tj, twhere, "grid_price");
  s.tariff.agg_buy_price = detail::require_number(tj, twhere, "agg_buy");
  s.tariff.agg_sell_price = detail::require_number(tj, twhere, "agg_sell");
  s.tariff.contract_fee = detail::require_number(tj, twhere, "contract_fee");
  s.tariff.transfer_loss =
      tj.contains("transfer_loss") ? detail::require_number(tj, twhere, "transfer_loss") : 0.0;

  const ValidationReport rep = validate_scenario(s);
  if (!rep.pass()) {
    std::string msg = origin + ": scenario failed validation";
    for (const auto& issue : rep.issues) msg += "\n  - " + issue;
    throw validation_error(msg, rep);
  }
  return s;
}

inline Scenario parse_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open scenario file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str(), path.filename().string());
}

inline std::string emit_scenario(const Scenario& s) {
  using detail::json;
  json doc;
  doc["base_stations"] = json::array();
  for (const auto& bs : s.base_stations)
    doc["base_stations"].push_back({{"harvest_rate", bs.harvest_rate}, {"bandwidth", bs.bandwidth}});
  doc["terminals"] = json::array();
  for (const auto& mt : s.terminals)
    doc["terminals"].push_back({{"home_bs", mt.home_bs}, {"min_rate", mt.min_rate}});
  json ch;
  if (s.channel.mode == ChannelMode::deterministic_average) {
    ch["mode"] = "deterministic-average";
    ch["average_gains"] = {{"own", s.channel.own_mean}, {"cross", s.channel.cross_mean}};
  } else {
    ch["mode"] = "seeded-random";
    ch["seed"] = s.channel.seed.value_or(0);
    ch["average_gains"] = {{"own", s.channel.own_mean}, {"cross", s.channel.cross_mean}};
  }
  doc["channel"] = ch;
  doc["noise_density"] = s.noise_density;
  doc["tariff"] = {{"grid_price", s.tariff.grid_price},
                   {"agg_buy", s.tariff.agg_buy_price},
                   {"agg_sell", s.tariff.agg_sell_price},
                   {"contract_fee", s.tariff.contract_fee},
                   {"transfer_loss", s.tariff.transfer_loss}};
  return doc.dump(2) + "\n";
}

// Seeded scenario generator. The seed only drives the channel; every other
// field is a fixed, case-study-like default so two runs with the same
// arguments emit byte-identical files.
inline std::string generate_scenario(int bs_count, const std::vector<int>& mts_per_bs,
                                     std::uint64_t seed,
                                     const std::vector<double>& harvest_rates = {},
                                     double bandwidth = 10.0, double min_rate = 1.0) {
  if (bs_count < 1) throw std::invalid_argument("generate_scenario: bs_count must be >= 1");
  if (mts_per_bs.size() != static_cast<std::size_t>(bs_count))
    throw std::invalid_argument("generate_scenario: one terminal count per base station required");
  if (!harvest_rates.empty() && harvest_rates.size() != static_cast<std::size_t>(bs_count))
    throw std::invalid_argument("generate_scenario: one harvest rate per base station required");

  Scenario s;
  for (int b = 0; b < bs_count; ++b) {
    if (mts_per_bs[b] < 1)
      throw std::invalid_argument("generate_scenario: terminal counts must be >= 1");
    BaseStation bs;
    bs.id = b;
    bs.harvest_rate = harvest_rates.empty() ? 5.0 : harvest_rates[b];
    bs.bandwidth = bandwidth;
    s.base_stations.push_back(bs);
    for (int m = 0; m < mts_per_bs[b]; ++m) {
      MobileTerminal mt;
      mt.id = static_cast<int>(s.terminals.size());
      mt.home_bs = b;
      mt.min_rate = min_rate;
      s.terminals.push_back(mt);
    }
  }
  std::vector<int> home;
  home.reserve(s.terminals.size());
  for (const auto& mt : s.terminals) home.push_back(mt.home_bs);
  s.channel = ChannelMatrix::seeded(s.base_stations.size(), home, 1.0, 0.6, seed);
  s.noise_density = 1.0;
  s.tariff = Tariff{1.0, 0.5, 0.4, 0.1, 0.0};
  return emit_scenario(s);
}

}  // namespace greencoop
