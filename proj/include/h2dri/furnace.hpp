#ifndef H2DRI_FURNACE_HPP
#define H2DRI_FURNACE_HPP

#include "h2dri/config.hpp"
#include "h2dri/ledger.hpp"
#include "h2dri/thermo.hpp"

// Reduction stoichiometry, shaft-furnace heat balance and furnace-level
// energy/exergy ledgers.

namespace h2dri {

struct Stoichiometry {
  double fe_mol = 0.0;        // total Fe in the DRI batch
  double fe_reduced_mol = 0.0; // eta_fe_h2 * fe_mol, reduced this pass
  double gas_stoich_mol = 0.0; // 3/2 per mol Fe, before the conversion factor
  double n1 = 0.0;            // reducing gas chemically consumed, mol
  double n1_h2 = 0.0;
  double n1_co = 0.0;
  double h2o_mol = 0.0;       // product water, 1:1 with consumed H2
  double co2_mol = 0.0;       // product CO2, 1:1 with consumed CO
  double ore_mass = 0.0;      // kg, hematite + gangue
  double fe2o3_mass = 0.0;    // kg
  double gangue_mass = 0.0;   // kg
};

// Eq.-of-reaction accounting for m_DRI kg of product at w_Fe iron content
// reduced by an H2/CO mix.
Stoichiometry stoichiometry(double m_dri, double w_fe, double h2_share,
                            double eta_fe_h2, double gangue_fraction,
                            const PropertyTable& pt);

struct FurnaceBalance {
  double n1 = 0.0;
  double n2 = 0.0;
  double t_in = 0.0;   // K, reducing gas inlet
  double t_out = 0.0;  // K, furnace top gas
  double t_dri = 0.0;  // K
  double w_in_gas = 0.0;
  double w_in_ore = 0.0;
  double w_reaction = 0.0;
  double w_dri_out = 0.0;
  double w_ch2_out = 0.0;   // circulating-gas sensible heat at the top
  double w_loss = 0.0;      // eta1 * total output
  double w_dust_out = 0.0;
  double w_h2o_out = 0.0;   // product-vapor sensible heat (water_factor applied)
  double w_toll_out = 0.0;

  // Relative closure residual of input vs the six-term output sum.
  double closure_residual() const;
};

// Solves the linear energy balance for the circulating-gas moles n2.
// Gas heat-capacity coefficients are the ideal-gas gamma form, matching the
// component ledgers. Throws with a deficit diagnostic when no non-negative
// n2 can close the balance.
FurnaceBalance heat_balance_solve(double t_in, double t_out, double t_dri,
                                  const Stoichiometry& st,
                                  const ScenarioConfig& cfg,
                                  const PropertyTable& pt);

struct FurnaceStreams {
  GasStream feed;    // n1+n2 mix at t_in
  GasStream top_gas; // circulating gas + product vapor at t_out
  SolidStream dri;
  SolidStream ore;
};

struct FurnaceLedgers {
  ComponentReport report;
  FurnaceStreams streams;
  // Aggregate-facing pieces
  double w_dri_out_ph = 0.0;
  double w_dri_out_ch = 0.0;
  double w_ch2_ch = 0.0;   // circulating-gas chemical energy
  double w_prod_ch = 0.0;  // product-vapor chemical energy (dG route)
  double ex_dri_out = 0.0; // physical + chemical
  double ex_prod_ch = 0.0; // product-vapor chemical exergy
  double ex_ch2_ch = 0.0;
  double ex_ore_in = 0.0;
  double w_ore_in = 0.0;
};

// Energy/exergy ledger of the shaft furnace around a converged balance.
FurnaceLedgers furnace_ledgers(const FurnaceBalance& bal, const Stoichiometry& st,
                               const ScenarioConfig& cfg, const PropertyTable& pt);

} // namespace h2dri

#endif
