#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>

#include "greencoop/report.hpp"
#include "greencoop/scenario_io.hpp"
#include "test_scenarios.hpp"

using namespace greencoop;

namespace {

double row_total(const ComparisonReport& rep, Scheme scheme) {
  for (const auto& row : rep.rows)
    if (row.scheme == scheme) return row.result.cost.total;
  FAIL("row not found");
  return 0.0;
}

}  // namespace

TEST_CASE("comparison on the reference scenario reproduces all eight totals", "[report]") {
  const ComparisonReport rep = compare_all(gctest::case_study());
  REQUIRE(rep.rows.size() == 8);
  for (const auto& row : rep.rows) CHECK(row.supported);
  CHECK(row_total(rep, Scheme::conventional) == Catch::Approx(15.78).margin(0.01));
  CHECK(row_total(rep, Scheme::trading) == Catch::Approx(10.51).margin(0.01));
  CHECK(row_total(rep, Scheme::sharing) == Catch::Approx(10.03).margin(0.01));
  CHECK(row_total(rep, Scheme::spectrum) == Catch::Approx(11.54).margin(0.01));
  CHECK(row_total(rep, Scheme::comp) == Catch::Approx(1.25).margin(0.01));
  CHECK(row_total(rep, Scheme::joint_energy_spectrum) == Catch::Approx(7.60).margin(0.01));
  CHECK(row_total(rep, Scheme::joint_trading_comp) == Catch::Approx(0.46).margin(0.01));
  CHECK(row_total(rep, Scheme::joint_sharing_comp) == Catch::Approx(0.10).margin(0.01));
}

TEST_CASE("the formatted table prints the published two-decimal costs", "[report]") {
  const std::string table = format_table(compare_all(gctest::case_study()));
  for (const std::string cell :
       {"15.78", "10.51", "10.03", "11.54", "1.25", "7.60", "0.46", "0.10"})
    CHECK(table.find(cell) != std::string::npos);
  // The reproduction row is flagged and the footnote quotes the optimizer.
  CHECK(table.find("*") != std::string::npos);
  CHECK(table.find("full optimizer") != std::string::npos);
}

TEST_CASE("precision flag widens the table", "[report]") {
  const std::string table = format_table(compare_all(gctest::case_study()), 4);
  CHECK(table.find("15.7843") != std::string::npos);
  CHECK(table.find("18.2843") != std::string::npos);
}

TEST_CASE("a scenario without traffic costs nothing except contract fees", "[report]") {
  Scenario s = gctest::case_study();
  s.terminals.clear();
  s.base_stations[0].harvest_rate = 0.0;
  s.base_stations[1].harvest_rate = 0.0;
  std::vector<int> home;
  s.channel = ChannelMatrix::deterministic(2, home, 1.0, 0.6);
  const ComparisonReport rep = compare_all(s);
  for (const auto& row : rep.rows) {
    REQUIRE(row.supported);
    const bool sharing_row = row.scheme == Scheme::sharing ||
                             row.scheme == Scheme::joint_energy_spectrum ||
                             row.scheme == Scheme::joint_sharing_comp;
    if (sharing_row)
      CHECK(row.result.cost.total == Catch::Approx(s.tariff.contract_fee).margin(1e-9));
    else
      CHECK(row.result.cost.total == Catch::Approx(0.0).margin(1e-9));
  }
}

TEST_CASE("unsupported schemes become annotated rows, not failures", "[report]") {
  const auto s = gctest::make_scenario({5, 5, 5}, {10, 10, 10}, {0, 1, 2}, {1, 1, 1},
                                       {1, .6, .6, .6, 1, .6, .6, .6, 1});
  const ComparisonReport rep = compare_all(s);
  REQUIRE(rep.rows.size() == 8);
  for (const auto& row : rep.rows) {
    const bool two_bs_only =
        row.scheme == Scheme::spectrum || row.scheme == Scheme::joint_energy_spectrum;
    CHECK(row.supported == !two_bs_only);
  }
  const std::string table = format_table(rep);
  CHECK(table.find("n/a") != std::string::npos);
}

TEST_CASE("comparison output is deterministic across runs", "[report]") {
  const Scenario s = parse_scenario_text(generate_scenario(2, {4, 6), 42}, "det");
  const ComparisonReport a = compare_all(s);
  const ComparisonReport b = compare_all(s);
  CHECK(format_table(a) == format_table(b));
  CHECK(to_csv(a) == to_csv(b));
  CHECK(to_jsonl(a) == to_jsonl(b));
}

TEST_CASE("machine exports carry full precision totals", "[report]") {
  const ComparisonReport rep = compare_all(gctest::case_study());
  const std::string csv = to_csv(rep);
  // Conventional total appears unrounded in the CSV.
  CHECK(csv.find("15.78427124") != std::string::npos);
  const std::string jsonl = to_jsonl(rep);
  CHECK(jsonl.find("\"scheme\":\"conventional\"") != std::string::npos);
  // One record per row.
  std::size_t lines = 0;
  for (char c : jsonl)
    if (c == '\n') ++lines;
  CHECK(lines == rep.rows.size());
}

TEST_CASE("scheme records can be rebuilt from run_scheme directly", "[report]") {
  const Scenario s = gctest::case_study();
  const ComparisonReport rep = compare_all(s);
  for (const auto& row : rep.rows) {
    if (row.scheme == Scheme::joint_trading_comp) continue;  // table uses the fixed-price path
    const SchemeResult direct = run_scheme(s, row.scheme);
    CHECK(direct.cost.total == Catch::Approx(row.result.cost.total).margin(1e-9));
  }
}
