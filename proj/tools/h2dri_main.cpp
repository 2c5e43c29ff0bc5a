// Scenario execution front door: config ingestion, temperature sweeps,
// CSV emission and run comparison.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "h2dri/csv.hpp"
#include "h2dri/flowsheet.hpp"

namespace fs = std::filesystem;
using namespace h2dri;

namespace {

std::vector<double> parse_t_range(const std::string& spec) {
  const auto c1 = spec.find(':');
  const auto c2 = spec.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw CLI::ValidationError("--t-range", "expected LO:HI:STEP");
  const double lo = std::stod(spec.substr(0, c1));
  const double hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
  const double step = std::stod(spec.substr(c2 + 1));
  if (step <= 0.0 || hi < lo)
    throw CLI::ValidationError("--t-range", "grid must be strictly increasing");
  std::vector<double> out;
  for (double t = lo; t <= hi + 1e-9; t += step) out.push_back(t);
  return out;
}

int run_command(const std::string& config_path, const std::string& scenario,
                double t_single, const std::string& t_range, double batch_kg,
                bool no_waste_heat, bool no_penalty, bool dump_profiles,
                const std::string& out_dir) {
  ScenarioConfig base;
  try {
    if (!config_path.empty()) base.apply_file(config_path);
    if (batch_kg > 0.0) base.dri_batch_kg = batch_kg;
    if (no_waste_heat) base.waste_heat_recovery = false;
    if (no_penalty) base.penalty_enabled = false;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }

  std::vector<ScenarioKind> kinds;
  if (scenario == "all") {
    kinds = {ScenarioKind::ZeroCarbon, ScenarioKind::Traditional64,
             ScenarioKind::Traditional82, ScenarioKind::Grid};
  } else {
    try {
      kinds = {scenario_from_name(scenario)};
    } catch (const std::exception& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return 1;
    }
  }

  std::vector<double> temps;
  try {
    if (t_single > 0.0)
      temps = {t_single};
    else if (!t_range.empty())
      temps = parse_t_range(t_range);
    else
      temps = parse_t_range("1023:1273:25");
    for (double t : temps)
      if (t < 1023.0 || t > 1273.0)
        throw CLI::ValidationError("--t", "temperatures must lie in [1023, 1273] K");
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "config error: cannot create output directory " << out_dir << "\n";
    return 1;
  }

  // Deterministic grid order: scenarios in listed order, temperatures ascending.
  bool any_failed = false;
  std::vector<csvio::ResultRow> rows;
  for (ScenarioKind k : kinds) {
    for (double t : temps) {
      csvio::ResultRow row;
      row.scenario = scenario_name(k);
      row.t_in = t;
      ScenarioConfig cfg = base;
      cfg.kind = k;
      cfg.t_reduction_gas = t;
      try {
        row.report = solve_scenario(cfg);
        const double waste = row.report.topgas_recovery +
                             row.report.expander_electricity +
                             row.report.orc_electricity;
        row.ee_no_waste = cfg.waste_heat_recovery
                              ? (row.report.agg.w_sys_out - waste) / row.report.agg.w_sys_in
                              : row.report.eff.ee;
        if (dump_profiles) {
          char name[128];
          std::snprintf(name, sizeof(name), "profile_%s_%.0f.csv",
                        row.scenario.c_str(), t);
          csvio::write_profile(out_dir + "/" + name, row.report.kin.profile);
        }
      } catch (const std::exception& e) {
        row.failed = true;
        row.failure = e.what();
        any_failed = true;
        std::cerr << "solver failure: " << row.scenario << " T=" << t << ": "
                  << e.what() << "\n";
      }
      rows.push_back(std::move(row));
    }
  }

  csvio::write_results(out_dir + "/results.csv", rows);
  csvio::write_figure_files(out_dir, rows);
  std::cout << "wrote " << rows.size() << " rows to " << out_dir << "/results.csv\n";
  return any_failed ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"hydrogen direct-reduction flowsheet simulator"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "solve scenarios over a temperature sweep");
  std::string config_path, scenario = "all", t_range, out_dir = ".";
  double t_single = 0.0, batch_kg = 0.0;
  bool no_waste_heat = false, no_penalty = false, dump_profiles = false;
  run->add_option("--config", config_path, "config file (key = value sections)");
  run->add_option("--scenario", scenario,
                  "zero-carbon|trad-64|trad-82|grid|all (default all)");
  run->add_option("--t", t_single, "single reduction-gas temperature, K");
  run->add_option("--t-range", t_range, "LO:HI:STEP grid in K (default 1023:1273:25)");
  run->add_option("--batch-kg", batch_kg, "DRI batch mass, kg");
  run->add_flag("--no-waste-heat", no_waste_heat,
                "drop store/ORC/expander outputs from the indices");
  run->add_flag("--no-penalty", no_penalty, "disable the CE penalty multipliers");
  run->add_flag("--dump-profiles", dump_profiles, "write z,T_gas,T_solid per solve");
  run->add_option("--out", out_dir, "output directory (default .)");

  auto* diff = app.add_subcommand("diff", "compare two results.csv files");
  std::string run_a, run_b;
  double threshold = 0.0;
  diff->add_option("a", run_a, "first results.csv")->required();
  diff->add_option("b", run_b, "second results.csv")->required();
  diff->add_option("--threshold", threshold,
                   "allowed delta (absolute and relative), default 0");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run)
      return run_command(config_path, scenario, t_single, t_range, batch_kg,
                         no_waste_heat, no_penalty, dump_profiles, out_dir);
    const auto d = csvio::diff_results(run_a, run_b, threshold);
    if (!d.grids_match) {
      for (const auto& m : d.messages) std::cerr << m << "\n";
      return 1;
    }
    std::printf("compared %d cells: max abs delta %.6g, max rel delta %.6g\n",
                d.cells_compared, d.max_abs, d.max_rel);
    for (const auto& m : d.messages) std::cout << "  " << m << "\n";
    return d.cells_exceeding > 0 ? 3 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
