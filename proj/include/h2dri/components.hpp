#ifndef H2DRI_COMPONENTS_HPP
#define H2DRI_COMPONENTS_HPP

#include <vector>

#include "h2dri/ledger.hpp"
#include "h2dri/thermo.hpp"

// Energy/exergy input-output models of the train components. Every function
// is pure: inputs -> (ComponentReport, outlet streams / scalars).

namespace h2dri {

struct StageSpec {
  double ratio = 1.0; // pressure ratio P_high / P_low, > 1
  double eta = 1.0;   // isentropic efficiency in (0, 1]
};

struct ElectrolyzerResult {
  ComponentReport report;
  GasStream hydrogen; // hot H2 at the cell outlet temperature
  double w_in = 0.0;  // electricity, J
};

// W_in = n_cells * V_cell * I * dt; hydrogen from Faraday's law.
ElectrolyzerResult electrolyzer(int n_cells, double v_cell, double current,
                                double dt, double t_out, double p_out,
                                double v_thermoneutral, const PropertyTable& pt);

struct CompressorResult {
  ComponentReport report;
  GasStream outlet;
  double w_in = 0.0;             // total electricity, J
  double intercool_heat = 0.0;   // heat rejected to the low-temperature store, J
  std::vector<double> stage_t_out; // K, before intercooling
  std::vector<double> stage_work;  // J
};

// Isentropic-efficiency stages with intercooling back to the inlet
// temperature; all rejected stage heat is captured.
CompressorResult compressor_train(const GasStream& inlet,
                                  const std::vector<StageSpec>& stages,
                                  const PropertyTable& pt);

struct ExpanderResult {
  ComponentReport report;
  GasStream outlet;       // cold hydrogen for the ORC condenser
  double electricity = 0.0; // J
  std::vector<double> stage_t_out;
  std::vector<double> stage_work;
};

// Sequential expansion stages, no interheating; ratio = P_in/P_out per stage.
ExpanderResult expander_train(const GasStream& inlet,
                              const std::vector<StageSpec>& stages,
                              double p_outlet_min, const PropertyTable& pt);

struct StoreChargeResult {
  ComponentReport report;
  double heat_in = 0.0;     // hot-stream duty, J
  double stored = 0.0;      // recovery * heat_in, J
  double fluid_t_out = 0.0; // K
};

// Recovery leg: hot gas cools t_hot_in -> t_hot_out into the storage fluid.
StoreChargeResult thermal_store_charge(const GasStream& hot, double t_hot_out,
                                       double fluid_c, double fluid_t_in,
                                       double fluid_t_out, double recovery,
                                       const PropertyTable& pt);

struct StoreDischargeResult {
  ComponentReport report;
  double heat_out = 0.0; // delivered duty, J
};

// Release leg: stored fluid heat delivered to a gas stream heated
// t_cold_in -> t_delivery. Drawing beyond `available` is an error.
StoreDischargeResult thermal_store_discharge(double duty, double available,
                                             double fluid_c, double fluid_t_hot,
                                             double fluid_t_cold,
                                             double t_cold_in, double t_delivery,
                                             double n_gas,
                                             const PropertyTable& pt);

struct OrcResult {
  ComponentReport report;
  double electricity = 0.0; // J
  double m_r32 = 0.0;       // kg of working fluid circulated
  double rejected_heat = 0.0; // condenser duty, J
};

// Sensible-heat cycle on the corner temperatures (T1 expander inlet,
// T2 expander outlet, T4 evaporator inlet); electricity/heat =
// (T1-T2)/(T1-T4). Condenser sink must be colder than the condensing level.
OrcResult orc_cycle(double store_duty, double ambient_duty, double c_r32,
                    double t1, double t2, double t4, double sink_temperature,
                    const PropertyTable& pt);

struct PlasmaResult {
  ComponentReport report;
  GasStream outlet;
  double w_in = 0.0; // electricity, J
};

// Electric heater: duty from the stream enthalpy rise, W_in = duty/eta.
PlasmaResult plasma_heat(const GasStream& inlet, double t_target, double eta_pla,
                         double re1, double t_max, const PropertyTable& pt);

struct CombustionResult {
  ComponentReport report;
  GasStream outlet;      // heated material gas
  double fuel_mol = 0.0; // coke-oven gas consumed
  double fuel_energy = 0.0; // fuel_mol * LHV_cog, J
  double co2_kg = 0.0;   // from fuel carbon
  double co_heat = 0.0;  // combustion heat of the CO share of the fuel, J
};

struct CokeOvenGas {
  double x_h2 = 0.58;
  double x_ch4 = 0.26;
  double x_co = 0.08;
  double lhv(const PropertyTable& pt) const;
  double chemical_exergy(const PropertyTable& pt) const;
  double co2_per_mol() const { return x_ch4 + x_co; } // mol CO2 / mol fuel
};

// Coke-oven-gas fired heater for the traditional scenarios.
CombustionResult combustion_furnace(const GasStream& inlet, double t_target,
                                    double eta_comb, const CokeOvenGas& cog,
                                    const PropertyTable& pt);

} // namespace h2dri

#endif
