// report.hpp - runs the full scheme comparison on a scenario and renders it
// as a fixed-point text table, a CSV for plotting, or line-delimited JSON
// records carrying the full ledgers.
#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "greencoop/joint.hpp"
#include "greencoop/scheme_result.hpp"
#include "greencoop/schemes.hpp"

namespace greencoop {

struct ComparisonRow {
  Scheme scheme = Scheme::conventional;
  bool supported = true;
  std::string note;  // annotation or the reason the row is unsupported
  SchemeResult result;
};

struct ComparisonReport {
  std::size_t bs_count = 0;
  std::vector<ComparisonRow> rows;
  std::vector<std::string> footnotes;
};

// The eight comparison rows, in presentation order. Traffic offloading is an
// optimizer in its own right but has no column set of its own here; run it
// separately through run_scheme.
inline const std::vector<Scheme>& comparison_schemes() {
  static const std::vector<Scheme> v = {
      Scheme::conventional,       Scheme::trading,
      Scheme::sharing,            Scheme::spectrum,
      Scheme::comp,               Scheme::joint_energy_spectrum,
      Scheme::joint_trading_comp, Scheme::joint_sharing_comp,
  };
  return v;
}

inline ComparisonReport compare_all(const Scenario& s, SolverConfig cfg = {}) {
  ComparisonReport rep;
  rep.bs_count = s.bs_count();
  for (Scheme scheme : comparison_schemes()) {
    ComparisonRow row;
    row.scheme = scheme;
    try {
      if (scheme == Scheme::joint_trading_comp) {
        // The row shows the fixed-price stationary point; the full optimizer
        // can only improve on it and is quoted in a footnote.
        row.result = joint_trading_comp_fixed_price(s, cfg);
        row.note = "*";
        const SchemeResult full = joint_trading_comp(s, cfg);
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "* joint-trading-comp row: fixed seller/buyer marginal-price point; the "
                      "full optimizer reaches total %.6f",
                      full.cost.total);
        rep.footnotes.push_back(buf);
      } else {
        row.result = run_scheme(s, scheme, cfg);
      }
    } catch (const error& e) {
      row.supported = false;
      row.note = e.what();
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

namespace detail {

inline std::string fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

}  // namespace detail

// Fixed-point table mirroring the per-BS supply/consumption columns plus the
// total cost. Internally everything stays full precision; only the rendering
// rounds.
inline std::string format_table(const ComparisonReport& rep, int precision = 2) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header = {"scheme"};
  for (std::size_t b = 0; b < rep.bs_count; ++b)
    header.push_back("BS" + std::to_string(b + 1) + " supply");
  for (std::size_t b = 0; b < rep.bs_count; ++b)
    header.push_back("BS" + std::to_string(b + 1) + " consumption");
  header.push_back("total cost");
  cells.push_back(header);

  for (const auto& row : rep.rows) {
    std::vector<std::string> line = {scheme_label(row.scheme) + (row.note == "*" ? " *" : "")};
    if (row.supported) {
      for (double v : row.result.renewable_supply) line.push_back(detail::fixed(v, precision));
      for (double v : row.result.consumption.per_bs_power)
        line.push_back(detail::fixed(v, precision));
      line.push_back(detail::fixed(row.result.cost.total, precision));
    } else {
      for (std::size_t i = 0; i < 2 * rep.bs_count + 1; ++i) line.push_back("n/a");
    }
    cells.push_back(std::move(line));
  }

  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());

  std::string out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      const auto& cell = cells[r][c];
      if (c == 0) {
        out += cell + std::string(width[c] - cell.size(), ' ');
      } else {
        out += "  " + std::string(width[c] - cell.size(), ' ') + cell;
      }
    }
    out += '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c ? 2 : 0);
      out += std::string(total, '-') + '\n';
    }
  }
  for (const auto& row : rep.rows)
    if (!row.supported) out += "note: " + scheme_id(row.scheme) + ": " + row.note + '\n';
  for (const auto& fn : rep.footnotes) out += fn + '\n';
  return out;
}

// Full-precision CSV of the comparison table.
inline std::string to_csv(const ComparisonReport& rep) {
  std::string out = "scheme";
  for (std::size_t b = 0; b < rep.bs_count; ++b) out += ",supply_bs" + std::to_string(b);
  for (std::size_t b = 0; b < rep.bs_count; ++b) out += ",consumption_bs" + std::to_string(b);
  out += ",total_cost\n";
  char buf[64];
  for (const auto& row : rep.rows) {
    out += scheme_id(row.scheme);
    if (!row.supported) {
      for (std::size_t i = 0; i < 2 * rep.bs_count + 1; ++i) out += ",";
      out += "\n";
      continue;
    }
    for (double v : row.result.renewable_supply) {
      std::snprintf(buf, sizeof(buf), ",%.17g", v);
      out += buf;
    }
    for (double v : row.result.consumption.per_bs_power) {
      std::snprintf(buf, sizeof(buf), ",%.17g", v);
      out += buf;
    }
    std::snprintf(buf, sizeof(buf), ",%.17g\n", row.result.cost.total);
    out += buf;
  }
  return out;
}

inline nlohmann::ordered_json scheme_result_to_json(const SchemeResult& res) {
  nlohmann::ordered_json j;
  j["scheme"] = scheme_id(res.scheme);
  j["renewable_supply"] = res.renewable_supply;
  j["consumption"] = res.consumption.per_bs_power;
  j["cost"] = {{"grid", res.cost.grid_cost},
               {"agg_buy", res.cost.agg_buy_cost},
               {"agg_sell_revenue", res.cost.agg_sell_revenue},
               {"contract_fee", res.cost.contract_fee},
               {"total", res.cost.total}};
  nlohmann::ordered_json ledger;
  ledger["grid_buy"] = res.ledger.grid_buy;
  ledger["agg_buy"] = res.ledger.agg_buy;
  ledger["agg_sell"] = res.ledger.agg_sell;
  ledger["transfers"] = nlohmann::ordered_json::array();
  for (const auto& tr : res.ledger.transfers)
    ledger["transfers"].push_back({{"from", tr.from_bs}, {"to", tr.to_bs}, {"amount", tr.amount}});
  ledger["contract_fee_paid"] = res.ledger.contract_fee_paid;
  j["ledger"] = ledger;
  if (res.partition)
    j["spectrum_partition"] = {{"shared_amount", res.partition->shared_amount},
                               {"effective_bandwidths", res.partition->effective_bandwidths}};
  if (res.comp) {
    j["comp"] = {{"sub_band_width", res.comp->sub_band_width},
                 {"mt_of_subband", res.comp->mt_of_subband},
                 {"power", res.comp->power}};
  }
  if (res.association) j["association"] = res.association->serving_bs;
  if (!res.notes.empty()) j["notes"] = res.notes;
  return j;
}

// One JSON record per scheme, newline-delimited.
inline std::string to_jsonl(const ComparisonReport& rep) {
  std::string out;
  for (const auto& row : rep.rows) {
    if (row.supported) {
      out += scheme_result_to_json(row.result).dump();
    } else {
      nlohmann::ordered_json j;
      j["scheme"] = scheme_id(row.scheme);
      j["unsupported"] = row.note;
      out += j.dump();
    }
    out += '\n';
  }
  return out;
}

}  // namespace greencoop
