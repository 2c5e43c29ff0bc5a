#ifndef H2DRI_CONFIG_HPP
#define H2DRI_CONFIG_HPP

#include <string>
#include <vector>

#include "h2dri/thermo.hpp"

namespace h2dri {

enum class ScenarioKind {
  ZeroCarbon,    // electrolytic H2, plasma heating, full waste-heat train
  Traditional64, // H2/CO 6:4, coke-oven-gas fired heater
  Traditional82, // H2/CO 8:2
  Grid,          // zero-carbon physics, grid-electricity carbon accounting
};

const char* scenario_name(ScenarioKind k);
ScenarioKind scenario_from_name(const std::string& name);

// All tunable parameters of a run. Field defaults are the calibrated
// operating point; every value can be overridden from a config file
// (flat `key = value` lines under [section] headers, unknown keys rejected).
struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::ZeroCarbon;

  // [scenario]
  double dri_batch_kg = 1000.0;
  double t_reduction_gas = 1273.0; // K, valid range [1023, 1273]
  double batch_time_s = 3600.0;
  bool waste_heat_recovery = true;
  bool penalty_enabled = true;
  // Reduction-gas share applied to the supply term of the actual indices;
  // < 0 uses n1/(n1+n2), 1.0 recovers the virtual input basis.
  double eta_gas_override = -1.0;
  std::string property_file; // empty -> built-in table

  // [properties] per-species column overrides, keys like `Fe_dG = 1.2e5`.
  struct PropertyOverride {
    Species species;
    char column; // M, c(p), g(amma), L(HV), d(G), E(x)
    double value;
  };
  std::vector<PropertyOverride> property_overrides;

  // [furnace]
  double w_fe = 0.95;          // Fe mass fraction of DRI
  double eta_fe_h2 = 0.94;     // conversion factor per pass
  double eta1 = 0.15;          // shaft-furnace heat loss ratio
  double eta2 = 0.03;          // dust heat loss ratio
  double dust_fraction = 0.02; // dust mass / ore mass
  double water_factor = 0.63;  // product-vapor moles per mol consumed gas
  double gangue_fraction = 0.04; // gangue mass fraction of ore
  double c_ore = 800.0;        // J/(kg K)
  double c_dri = 715.0;        // J/(kg K)
  double c_dust = 800.0;       // J/(kg K)
  double t_ore = 298.0;        // K
  double furnace_pressure = 8.0e5; // Pa
  double dh_red_h2 = 49.4e3;   // J/mol Fe, endothermic
  double dh_red_co = -26.0e3;  // J/mol Fe, exothermic (effective, fitted)

  // [kinetics]
  double bed_length = 8.0;     // m
  double bed_diameter = 2.0;   // m
  double pellet_diameter = 0.018; // m
  double porosity = 0.5;
  // Overall shell coefficient at the reference superficial velocity; the
  // effective value scales as (u/u_ref)^0.8 with the gas-side film.
  double h_wall = 8.8;         // W/(m^2 K) at h_wall_u_ref
  double h_wall_u_ref = 0.08;  // m/s
  double h_wall_u_exp = 0.75;
  int rk_steps = 2000;
  double shoot_tol = 0.1;      // K
  int shoot_max_iters = 100;
  double mu_ref_h2 = 0.89e-5;  // Pa s at 298 K
  double k_ref_h2 = 0.18;      // W/(m K) at 298 K
  double mu_ref_co = 1.74e-5;
  double k_ref_co = 0.025;
  double mu_exponent = 0.7;
  double k_exponent = 0.75;

  // [components]
  int n_cells = 1000;
  double v_cell = 1.81;            // V, must exceed thermoneutral 1.481 V
  double v_thermoneutral = 1.481;  // V
  double t_electrolyzer_out = 371.15; // K (98 C)
  std::vector<double> red_ratios{2.56, 2.56, 2.56};
  std::vector<double> red_etas{0.915, 0.915, 0.915};
  std::vector<double> circ_ratios{3.4, 3.4, 3.4};
  std::vector<double> circ_etas{0.918, 0.918, 0.918};
  std::vector<double> exp_ratios{2.85, 2.85, 3.0};
  std::vector<double> exp_etas{0.90, 0.90, 0.90};
  double storage_pressure = 20.0e6; // Pa
  double storage_temp = 298.0;      // K
  double store_recovery = 0.85;     // thermal store recovery efficiency
  double store_pinch = 20.0;        // K, delivery below charge source
  double eta_plasma = 0.95;
  double plasma_re1 = 0.443;        // irreversible loss rate of delivered heat
  double plasma_t_max = 1323.0;     // K
  double store_fluid_c = 4186.0;    // J/(kg K)

  // [orc]
  double orc_c_r32 = 2400.0;  // J/(kg K), effective (latent heat folded in)
  double orc_t1 = 344.0;      // K, expander inlet / evaporator outlet
  double orc_t2 = 320.0;      // K, expander outlet
  double orc_t4 = 248.0;      // K, evaporator inlet (condensate)
  double orc_ambient_fraction = 0.435; // evaporator duty share from ambient air

  // [traditional]
  double eta_comb = 0.50;
  double cog_h2 = 0.58;  // coke-oven-gas mole fractions
  double cog_ch4 = 0.26;
  double cog_co = 0.046;
  double supply_temp = 298.0; // K, purchased-gas delivery

  // [carbon]
  double p_co2 = 120.0;          // CNY/t
  double c_base = 1.77;          // t CO2 allowance per batch
  double elec_price = 0.52;      // CNY/kWh -> M_energy
  double grid_factor = 0.57;     // t CO2 per MWh of grid electricity
  double theta = 1.2;            // penalty factor, CE in (1, 1.2]
  double nu = 1.5;               // penalty factor, CE > 1.2

  // [solver]
  double fp_tol = 1e-6;
  int fp_max_iters = 200;
  double fp_damping = 0.5;

  // Reduction-gas composition of the scenario (H2 share, CO share).
  double h2_share() const;
  double co_share() const { return 1.0 - h2_share(); }
  bool traditional() const {
    return kind == ScenarioKind::Traditional64 || kind == ScenarioKind::Traditional82;
  }

  PropertyTable make_property_table() const;
  void validate() const;

  // Parse `key = value` overrides from a file onto *this. Unknown keys and
  // malformed lines raise with file:line diagnostics.
  void apply_file(const std::string& path);
  void apply_override(const std::string& section, const std::string& key,
                      const std::string& value, const std::string& where);
};

} // namespace h2dri

#endif
