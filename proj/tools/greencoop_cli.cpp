// greencoop_cli.cpp - scenario validation, scheme execution, comparison
// reports and seeded scenario generation.
//
// Exit codes: 0 success, 1 parse/validation failure, 2 infeasible or
// unsupported scheme/scenario combination.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "greencoop/greencoop.hpp"

namespace {

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write to " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-cost minimization for renewable-powered cellular networks"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string scheme_name;
  std::string out_path;
  std::string csv_path;
  std::string jsonl_path;
  int precision = 2;

  auto* validate = app.add_subcommand("validate", "Check a scenario file against all invariants");
  validate->add_option("file", scenario_path, "scenario file")->required();

  auto* run = app.add_subcommand("run", "Run one cooperation scheme on a scenario");
  run->add_option("file", scenario_path, "scenario file")->required();
  run->add_option("--scheme", scheme_name, "scheme id")->required();
  run->add_option("--out", out_path, "write the JSON record to this path");

  auto* compare = app.add_subcommand("compare", "Run all comparison schemes and print the table");
  compare->add_option("file", scenario_path, "scenario file")->required();
  compare->add_option("--precision", precision, "table decimals (default 2)");
  compare->add_option("--csv", csv_path, "write the comparison table as CSV");
  compare->add_option("--jsonl", jsonl_path, "write one JSON record per scheme");

  int gen_bs = 0;
  std::string gen_mts;
  std::uint64_t gen_seed = 0;
  std::string gen_harvest;
  auto* gen = app.add_subcommand("gen", "Generate a seeded random-channel scenario file");
  gen->add_option("--bs", gen_bs, "number of base stations")->required();
  gen->add_option("--mts", gen_mts, "comma-separated terminals per base station")->required();
  gen->add_option("--seed", gen_seed, "channel seed")->required();
  gen->add_option("--harvest", gen_harvest, "comma-separated harvest rates (default 5 each)");
  gen->add_option("--out", out_path, "write the scenario to this path instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      try {
        greencoop::parse_scenario(scenario_path);
      } catch (const greencoop::validation_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
      } catch (const greencoop::parse_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
      }
      std::cout << "ok: " << scenario_path << " passes validation\n";
      return 0;
    }

    if (*run) {
      const auto scenario = greencoop::parse_scenario(scenario_path);
      const auto scheme = greencoop::scheme_from_id(scheme_name);
      const auto result = greencoop::run_scheme(scenario, scheme);
      const std::string record = greencoop::scheme_result_to_json(result).dump() + "\n";
      std::cout << record;
      if (!out_path.empty()) write_file(out_path, record);
      return 0;
    }

    if (*compare) {
      const auto scenario = greencoop::parse_scenario(scenario_path);
      const auto report = greencoop::compare_all(scenario);
      std::cout << greencoop::format_table(report, precision);
      if (!csv_path.empty()) write_file(csv_path, greencoop::to_csv(report));
      if (!jsonl_path.empty()) write_file(jsonl_path, greencoop::to_jsonl(report));
      return 0;
    }

    if (*gen) {
      const auto mts = parse_int_list(gen_mts);
      const auto harvest = gen_harvest.empty() ? std::vector<double>{} : parse_double_list(gen_harvest);
      const std::string text = greencoop::generate_scenario(gen_bs, mts, gen_seed, harvest);
      if (out_path.empty())
        std::cout << text;
      else
        write_file(out_path, text);
      return 0;
    }
  } catch (const greencoop::validation_error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const greencoop::parse_error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const greencoop::unsupported_error& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const greencoop::infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
