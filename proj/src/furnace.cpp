#include "h2dri/furnace.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace h2dri {

namespace {

double mix_gamma_cp(double h2_share, const PropertyTable& pt) {
  return h2_share * pt.gamma_cp(Species::H2) +
         (1.0 - h2_share) * pt.gamma_cp(Species::CO);
}

double mix_lhv(double h2_share, const PropertyTable& pt) {
  return h2_share * pt.lhv(Species::H2) + (1.0 - h2_share) * pt.lhv(Species::CO);
}

} // namespace

Stoichiometry stoichiometry(double m_dri, double w_fe, double h2_share,
                            double eta_fe_h2, double gangue_fraction,
                            const PropertyTable& pt) {
  if (m_dri < 0.0) throw std::invalid_argument("stoichiometry: negative DRI batch");
  if (w_fe <= 0.0 || w_fe > 1.0)
    throw std::invalid_argument("stoichiometry: w_fe outside (0, 1]");
  if (h2_share < 0.0 || h2_share > 1.0)
    throw std::invalid_argument("stoichiometry: gas shares must sum to 1");

  Stoichiometry st;
  if (m_dri == 0.0) return st;

  st.fe_mol = w_fe * m_dri / pt.molar_mass(Species::Fe);
  st.fe_reduced_mol = eta_fe_h2 * st.fe_mol;
  st.gas_stoich_mol = 1.5 * st.fe_mol; // 3/2 mol reducing gas per mol Fe
  st.n1 = 1.5 * st.fe_reduced_mol;
  st.n1_h2 = h2_share * st.n1;
  st.n1_co = st.n1 - st.n1_h2;
  st.h2o_mol = st.n1_h2;
  st.co2_mol = st.n1_co;
  st.fe2o3_mass = 0.5 * st.fe_mol * pt.molar_mass(Species::Fe2O3);
  st.ore_mass = st.fe2o3_mass / (1.0 - gangue_fraction);
  st.gangue_mass = st.ore_mass - st.fe2o3_mass;
  return st;
}

double FurnaceBalance::closure_residual() const {
  const double in = w_in_gas + w_in_ore;
  const double out = w_reaction + w_dri_out + w_ch2_out + w_loss + w_dust_out +
                     w_h2o_out;
  return std::abs(in - out) / std::max(1.0, out);
}

FurnaceBalance heat_balance_solve(double t_in, double t_out, double t_dri,
                                  const Stoichiometry& st,
                                  const ScenarioConfig& cfg,
                                  const PropertyTable& pt) {
  const double T0 = pt.ref.T0;
  const double dt_in = t_in - T0;
  const double dt_out = t_out - T0;
  const double h2s = st.n1 > 0.0 ? st.n1_h2 / st.n1 : 1.0;
  const double cpg = mix_gamma_cp(h2s, pt);
  const double wf = cfg.water_factor;

  const double w_ore = st.ore_mass * cfg.c_ore * (cfg.t_ore - T0);
  const double dh_mix = h2s * cfg.dh_red_h2 + (1.0 - h2s) * cfg.dh_red_co;
  const double w_reaction = st.fe_reduced_mol * dh_mix;
  const double w_dri = cfg.dri_batch_kg * cfg.c_dri * (t_dri - T0);
  const double m_dust = cfg.dust_fraction * st.ore_mass;
  const double w_dust = cfg.eta2 * m_dust * cfg.c_dust * dt_out;
  const double w_prod = (wf * st.n1_h2 * pt.gamma_cp(Species::H2O) +
                         wf * st.n1_co * pt.gamma_cp(Species::CO2)) *
                        dt_out;

  const double keep = 1.0 - cfg.eta1;
  const double fixed_out = w_reaction + w_dri + w_dust + w_prod;
  const double den = cpg * (dt_in - dt_out / keep);
  if (den <= 0.0)
    throw std::runtime_error(
        "heat balance: top-gas temperature too close to the inlet, "
        "circulating gas cannot close the balance");
  const double num = fixed_out / keep - st.n1 * cpg * dt_in - w_ore;
  const double n2 = num / den;
  if (n2 < 0.0)
    throw std::runtime_error(
        "heat balance: infeasible (negative circulating gas); heat surplus " +
        std::to_string(-num) + " J at n2 = 0");

  FurnaceBalance b;
  b.n1 = st.n1;
  b.n2 = n2;
  b.t_in = t_in;
  b.t_out = t_out;
  b.t_dri = t_dri;
  b.w_in_gas = (st.n1 + n2) * cpg * dt_in;
  b.w_in_ore = w_ore;
  b.w_reaction = w_reaction;
  b.w_dri_out = w_dri;
  b.w_ch2_out = n2 * cpg * dt_out;
  b.w_dust_out = w_dust;
  b.w_h2o_out = w_prod;
  b.w_toll_out = (fixed_out + b.w_ch2_out) / keep;
  b.w_loss = cfg.eta1 * b.w_toll_out;
  return b;
}

FurnaceLedgers furnace_ledgers(const FurnaceBalance& bal, const Stoichiometry& st,
                               const ScenarioConfig& cfg, const PropertyTable& pt) {
  const double T0 = pt.ref.T0;
  const double h2s = st.n1 > 0.0 ? st.n1_h2 / st.n1 : 1.0;
  const double wf = cfg.water_factor;

  FurnaceLedgers fl;
  auto& streams = fl.streams;

  GasStream feed;
  feed.n = st.n1 + bal.n2;
  feed.T = bal.t_in;
  feed.P = cfg.furnace_pressure;
  feed.set_fraction(Species::H2, h2s);
  feed.set_fraction(Species::CO, 1.0 - h2s);
  feed.validate();
  streams.feed = feed;

  GasStream top;
  const double n_circ = bal.n2;
  const double n_h2o = wf * st.n1_h2;
  const double n_co2 = wf * st.n1_co;
  top.n = n_circ + n_h2o + n_co2;
  top.T = bal.t_out;
  top.P = cfg.furnace_pressure;
  if (top.n > 0.0) {
    top.set_fraction(Species::H2, n_circ * h2s / top.n);
    top.set_fraction(Species::CO, n_circ * (1.0 - h2s) / top.n);
    top.set_fraction(Species::H2O, n_h2o / top.n);
    top.set_fraction(Species::CO2, n_co2 / top.n);
  } else {
    top.set_fraction(Species::H2, 1.0);
  }
  top.validate();
  streams.top_gas = top;

  streams.dri = SolidStream{cfg.dri_batch_kg, cfg.w_fe, bal.t_dri};
  streams.ore = SolidStream{st.ore_mass, 1.0 - cfg.gangue_fraction, cfg.t_ore};

  const double n_fe2o3 = 0.5 * st.fe_mol;
  const double ore_ph = solid_physical_energy(st.ore_mass, cfg.c_ore, cfg.t_ore, T0);
  const double ore_ch = n_fe2o3 * pt.dg(Species::Fe2O3);
  const double gas_ph = gas_physical_energy(feed, pt);
  const double gas_ch = gas_chemical_energy(feed, pt);

  const double dri_ph = solid_physical_energy(cfg.dri_batch_kg, cfg.c_dri, bal.t_dri, T0);
  const double dri_ch = st.fe_mol * pt.dg(Species::Fe);
  const double ch2_ph = bal.w_ch2_out;
  const double ch2_ch = n_circ * mix_lhv(h2s, pt);
  const double prod_ph = bal.w_h2o_out;
  const double prod_ch = n_h2o * pt.dg(Species::H2O) + n_co2 * pt.dg(Species::CO2);

  auto& rep = fl.report;
  rep.id = "shaft_furnace";
  rep.energy.add_in("ore_physical", ore_ph);
  rep.energy.add_in("ore_chemical", ore_ch);
  rep.energy.add_in("gas_physical", gas_ph);
  rep.energy.add_in("gas_chemical", gas_ch);
  rep.energy.add_out("dri_physical", dri_ph);
  rep.energy.add_out("dri_chemical", dri_ch);
  rep.energy.add_out("circulating_gas_physical", ch2_ph);
  rep.energy.add_out("circulating_gas_chemical", ch2_ch);
  rep.energy.add_out("product_vapor_physical", prod_ph);
  rep.energy.add_out("product_vapor_chemical", prod_ch);
  rep.losses.push_back({"reaction", bal.w_reaction});
  rep.losses.push_back({"shell_loss", bal.w_loss});
  rep.losses.push_back({"dust", bal.w_dust_out});
  // Chemical energy destroyed converting reducing gas + ore into DRI and
  // product vapor; the balance of the LHV/dG bookkeeping.
  rep.losses.push_back(
      {"chemical_conversion", st.n1 * mix_lhv(h2s, pt) + ore_ch - dri_ch - prod_ch});

  // Exergy: thermal parts in the printed (pressure-free) form, chemical parts
  // from the standard chemical-exergy column with mixing over the actual
  // stream composition.
  const double ore_ex = solid_physical_exergy(st.ore_mass, cfg.c_ore, cfg.t_ore, T0) +
                        n_fe2o3 * pt.ex(Species::Fe2O3);
  const double gas_ex_th = gas_thermal_exergy(feed, pt);
  const double gas_ex_ch = gas_chemical_exergy(feed, pt);
  const double dri_ex =
      solid_physical_exergy(cfg.dri_batch_kg, cfg.c_dri, bal.t_dri, T0) +
      st.fe_mol * pt.ex(Species::Fe);
  const double top_ex_th = gas_thermal_exergy(top, pt);

  const auto& ref = pt.ref;
  auto part_ex = [&](Species s, double n_part) {
    const double x = top.fraction(s);
    if (x == 0.0 || n_part == 0.0) return 0.0;
    return n_part * (pt.ex(s) + ref.R * ref.T0 * std::log(x));
  };
  const double ex_ch2 = part_ex(Species::H2, n_circ * h2s) +
                        part_ex(Species::CO, n_circ * (1.0 - h2s));
  const double ex_prod = part_ex(Species::H2O, n_h2o) + part_ex(Species::CO2, n_co2);

  rep.exergy.add_in("ore", ore_ex);
  rep.exergy.add_in("gas_thermal", gas_ex_th);
  rep.exergy.add_in("gas_chemical", gas_ex_ch);
  rep.exergy.add_out("dri", dri_ex);
  rep.exergy.add_out("top_gas_thermal", top_ex_th);
  rep.exergy.add_out("top_gas_chemical", ex_ch2 + ex_prod);
  rep.verify();

  fl.w_dri_out_ph = dri_ph;
  fl.w_dri_out_ch = dri_ch;
  fl.w_ch2_ch = ch2_ch;
  fl.w_prod_ch = prod_ch;
  fl.ex_dri_out = dri_ex;
  fl.ex_prod_ch = ex_prod;
  fl.ex_ch2_ch = ex_ch2;
  fl.ex_ore_in = ore_ex;
  fl.w_ore_in = ore_ph + ore_ch;
  return fl;
}

} // namespace h2dri
