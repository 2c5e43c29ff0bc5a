#ifndef H2DRI_FLOWSHEET_HPP
#define H2DRI_FLOWSHEET_HPP

#include <vector>

#include "h2dri/components.hpp"
#include "h2dri/config.hpp"
#include "h2dri/furnace.hpp"
#include "h2dri/kinetics.hpp"
#include "h2dri/ledger.hpp"
#include "h2dri/metrics.hpp"

// Scenario assembly: closes the circulating-gas fixed point against the
// gas-solid heat-transfer model, evaluates the component train and emits a
// SystemReport with ledgers, aggregates and efficiency indices.

namespace h2dri {

struct SystemClosure {
  std::vector<LedgerEntry> inputs;
  std::vector<LedgerEntry> outputs;
  std::vector<LedgerEntry> losses;

  double total(const std::vector<LedgerEntry>& v) const {
    double s = 0.0;
    for (const auto& e : v) s += e.value;
    return s;
  }
  // |in - out - loss| relative to the total input.
  double residual() const {
    const double in = total(inputs);
    return std::abs(in - total(outputs) - total(losses)) / std::max(1.0, in);
  }
};

struct SystemReport {
  ScenarioKind kind = ScenarioKind::ZeroCarbon;
  double t_in = 0.0; // K, reducing-gas inlet

  double n1 = 0.0;
  double n2 = 0.0;
  double t_topgas = 0.0;
  double t_dri = 0.0;
  int fp_iterations = 0;

  std::vector<ComponentReport> components;
  SystemAggregates agg;
  SystemClosure closure;
  EfficiencyReport eff;

  double co2_t = 0.0;              // per batch (grid: attributed)
  double orc_electricity = 0.0;    // J
  double expander_electricity = 0.0;
  double topgas_recovery = 0.0;    // delivered high-temperature store heat, J
  double co_heat = 0.0;            // CO reduction + fuel-CO combustion heat, J
  double electricity_in_total = 0.0; // J, basis of the grid carbon factor

  kinetics::ProfileSolution kin;

  const ComponentReport& component(const std::string& id) const;
};

SystemReport solve_scenario(const ScenarioConfig& cfg);

// Convenience: sweep one scenario over a temperature grid.
std::vector<SystemReport> solve_sweep(const ScenarioConfig& base,
                                      const std::vector<double>& temps);

} // namespace h2dri

#endif
