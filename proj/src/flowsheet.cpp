#include "h2dri/flowsheet.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace h2dri {

namespace {

double product_of(const std::vector<double>& v) {
  double p = 1.0;
  for (double x : v) p *= x;
  return p;
}

std::vector<StageSpec> make_stages(const std::vector<double>& ratios,
                                   const std::vector<double>& etas) {
  std::vector<StageSpec> s;
  for (std::size_t i = 0; i < ratios.size(); ++i) s.push_back({ratios[i], etas[i]});
  return s;
}

GasStream reduction_mix(double n, double h2_share, double T, double P) {
  if (h2_share >= 1.0) return GasStream::pure(Species::H2, n, T, P);
  return GasStream::binary(Species::H2, h2_share, Species::CO, n, T, P);
}

kinetics::BedSpec make_bed(const ScenarioConfig& cfg, const PropertyTable& pt,
                           double n_total, double h2_share) {
  const double t_film = 0.5 * (cfg.t_reduction_gas + cfg.t_ore);
  const double co_share = 1.0 - h2_share;
  const double m_mix = h2_share * pt.molar_mass(Species::H2) +
                       co_share * pt.molar_mass(Species::CO);
  const double cp_molar = h2_share * pt.cp(Species::H2) + co_share * pt.cp(Species::CO);
  const double scale = std::pow(t_film / pt.ref.T0, cfg.mu_exponent);
  const double mu = (h2_share * cfg.mu_ref_h2 + co_share * cfg.mu_ref_co) * scale;
  const double kscale = std::pow(t_film / pt.ref.T0, cfg.k_exponent);
  const double k = (h2_share * cfg.k_ref_h2 + co_share * cfg.k_ref_co) * kscale;

  kinetics::BedSpec bed;
  bed.porosity = cfg.porosity;
  bed.pellet_diameter = cfg.pellet_diameter;
  bed.inner_diameter = cfg.bed_diameter;
  bed.cross_section = 0.25 * M_PI * cfg.bed_diameter * cfg.bed_diameter;
  bed.length = cfg.bed_length;
  bed.gas_density = cfg.furnace_pressure * m_mix / (pt.ref.R * t_film);
  const double molar_rate = n_total / cfg.batch_time_s;
  const double mass_rate = molar_rate * m_mix;
  bed.gas_volumetric_flow = mass_rate / bed.gas_density;
  bed.superficial_velocity = bed.gas_volumetric_flow / bed.cross_section;
  bed.gas_viscosity = mu;
  bed.gas_conductivity = k;
  bed.gas_cp_mass = cp_molar / m_mix;
  bed.solids_mass_flow = cfg.dri_batch_kg / cfg.batch_time_s;
  bed.solids_cp_mass = cfg.c_dri;
  // Gas-side film dominates the shell coefficient.
  bed.wall_coefficient =
      cfg.h_wall * std::pow(bed.superficial_velocity / cfg.h_wall_u_ref, cfg.h_wall_u_exp);
  return bed;
}

} // namespace

const ComponentReport& SystemReport::component(const std::string& id) const {
  for (const auto& c : components)
    if (c.id == id) return c;
  throw std::out_of_range("no component report: " + id);
}

SystemReport solve_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  const PropertyTable pt = cfg.make_property_table();
  const auto& ref = pt.ref;
  const double h2s = cfg.h2_share();

  const Stoichiometry st = stoichiometry(cfg.dri_batch_kg, cfg.w_fe, h2s,
                                         cfg.eta_fe_h2, cfg.gangue_fraction, pt);

  // Stoichiometry fixes n1; the circulating gas n2 closes the coupled
  // gas-solid profile / furnace heat balance below.
  kinetics::SolverOptions kopt;
  kopt.rk_steps = cfg.rk_steps;
  kopt.tol = cfg.shoot_tol;
  kopt.max_iters = cfg.shoot_max_iters;
  kopt.t_ambient = ref.T0;

  kinetics::ProfileSolution kin;
  FurnaceBalance bal;
  int iters = 0;

  // Joint residual of the coupled loop: the circulating gas the balance
  // demands at the profile temperatures produced by n2 itself, minus n2.
  // The update map has gain slightly above one near the operating point
  // (hotter top gas asks for more gas, which heats the top gas further), so
  // a damped alternation diverges; the root is found by bracketed bisection
  // on the first sign change instead.
  auto residual = [&](double n2_guess) {
    const auto bed = make_bed(cfg, pt, st.n1 + n2_guess, h2s);
    kin = kinetics::solve_profile(bed, cfg.t_reduction_gas, cfg.t_ore, kopt);
    bal = heat_balance_solve(cfg.t_reduction_gas, kin.t_topgas, kin.t_dri, st, cfg, pt);
    ++iters;
    if (iters > cfg.fp_max_iters)
      throw std::runtime_error(
          "flowsheet: circulation loop failed to converge, last n2 = " +
          std::to_string(n2_guess));
    return bal.n2 - n2_guess;
  };

  // Scan upward for the first downward sign change of the residual: the
  // stable crossing of the balance and profile curves. Spurious crossings
  // appear near the balance pole (top gas approaching the inlet
  // temperature) and are never selected.
  const double grow = 1.25;
  double lo = 0.25 * st.n1;
  double g_lo = residual(lo);
  double b_lo = 0.0, b_hi = 0.0, gb_lo = 0.0;
  bool have_bracket = false;
  {
    double x = lo, g_x = g_lo;
    while (!have_bracket) {
      const double x_next = x * grow;
      if (x_next > 1e3 * st.n1) break;
      double g_next;
      try {
        g_next = residual(x_next);
      } catch (const std::runtime_error&) {
        break; // balance pole or profile failure terminates the scan
      }
      if (g_x > 0.0 && g_next <= 0.0) {
        b_lo = x;
        b_hi = x_next;
        gb_lo = g_x;
        have_bracket = true;
      }
      x = x_next;
      g_x = g_next;
    }
  }
  if (!have_bracket)
    throw std::runtime_error(
        "flowsheet: no circulation closure (heat balance cannot meet the "
        "profile temperatures at any gas rate)");

  double n2 = 0.0;
  for (;;) {
    n2 = 0.5 * (b_lo + b_hi);
    const double g_mid = residual(n2);
    if (std::abs(g_mid) / std::max(1.0, n2) < cfg.fp_tol) {
      n2 = bal.n2; // self-consistent balance at the profile temperatures
      break;
    }
    if (g_mid * gb_lo > 0.0) {
      b_lo = n2;
      gb_lo = g_mid;
    } else {
      b_hi = n2;
    }
    if (b_hi - b_lo < 1e-9 * std::max(1.0, b_hi))
      throw std::runtime_error(
          "flowsheet: circulation bracket collapsed without meeting the "
          "tolerance");
  }

  const FurnaceLedgers fl = furnace_ledgers(bal, st, cfg, pt);
  const double n_total = st.n1 + n2;

  SystemReport rep;
  rep.kind = cfg.kind;
  rep.t_in = cfg.t_reduction_gas;
  rep.n1 = st.n1;
  rep.n2 = n2;
  rep.t_topgas = kin.t_topgas;
  rep.t_dri = kin.t_dri;
  rep.fp_iterations = iters + 1;
  rep.kin = kin;

  auto& comps = rep.components;
  auto& closure = rep.closure;

  const bool electric = !cfg.traditional();
  const double circ_overall = product_of(cfg.circ_ratios);
  const double top_line_p = cfg.storage_pressure / circ_overall;

  double supply_w = 0.0, supply_ex = 0.0;
  double w_comp_total = 0.0, heater_w = 0.0, heater_ex = 0.0;
  double lt_charge_duty = 0.0, lt_stored = 0.0;
  double w_exp = 0.0, ex_exp_out = 0.0;
  double w_orc = 0.0, ex_orc_out = 0.0, q_ambient = 0.0;
  double electricity_total = 0.0;
  double co2_kg = 0.0, co_heat = 0.0;

  if (electric) {
    // Electrolyzer sized for one full gas inventory; Faraday-exact current.
    const double red_overall = product_of(cfg.red_ratios);
    const double p_el = cfg.storage_pressure / red_overall;
    const double current = n_total * 2.0 * ref.faraday / (cfg.n_cells * cfg.batch_time_s);
    auto el = electrolyzer(cfg.n_cells, cfg.v_cell, current, cfg.batch_time_s,
                           cfg.t_electrolyzer_out, p_el, cfg.v_thermoneutral, pt);
    supply_w = el.w_in;
    supply_ex = el.w_in; // EX_el_in = W_el_in
    electricity_total += el.w_in;
    closure.inputs.push_back({"electrolyzer_electricity", el.w_in});
    const double h_hot = gas_physical_energy(el.hydrogen, pt);
    closure.losses.push_back(
        {"electrolyzer_dissipation", el.w_in - el.hydrogen.n * pt.lhv(Species::H2) - h_hot});
    comps.push_back(el.report);

    // Hot-hydrogen cooling into the low-temperature store.
    auto elcool = thermal_store_charge(el.hydrogen, cfg.storage_temp, cfg.store_fluid_c,
                                       ref.T0, cfg.t_electrolyzer_out - cfg.store_pinch,
                                       cfg.store_recovery, pt);
    elcool.report.id = "lt_store_charge_electrolyzer";
    lt_charge_duty += elcool.heat_in;
    lt_stored += elcool.stored;
    comps.push_back(elcool.report);

    // Reduction-train compression to storage pressure, intercooled.
    GasStream red_in = GasStream::pure(Species::H2, n_total, cfg.storage_temp, p_el);
    auto red = compressor_train(red_in, make_stages(cfg.red_ratios, cfg.red_etas), pt);
    red.report.id = "compressor_reduction";
    w_comp_total += red.w_in;
    electricity_total += red.w_in;
    closure.inputs.push_back({"compressor_reduction_electricity", red.w_in});
    comps.push_back(red.report);
    for (std::size_t i = 0; i < red.stage_t_out.size(); ++i) {
      GasStream hot = red.outlet;
      hot.T = red.stage_t_out[i];
      auto ch = thermal_store_charge(hot, red_in.T, cfg.store_fluid_c, ref.T0,
                                     red.stage_t_out[i] - cfg.store_pinch,
                                     cfg.store_recovery, pt);
      ch.report.id = "lt_store_charge_red_stage" + std::to_string(i + 1);
      lt_charge_duty += ch.heat_in;
      lt_stored += ch.stored;
      comps.push_back(ch.report);
    }

    // Recycle compression of the circulating gas back to storage.
    GasStream circ_in =
        GasStream::pure(Species::H2, n2, cfg.storage_temp, top_line_p);
    auto circ = compressor_train(circ_in, make_stages(cfg.circ_ratios, cfg.circ_etas), pt);
    circ.report.id = "compressor_circle";
    w_comp_total += circ.w_in;
    electricity_total += circ.w_in;
    closure.inputs.push_back({"compressor_circle_electricity", circ.w_in});
    comps.push_back(circ.report);
    for (std::size_t i = 0; i < circ.stage_t_out.size(); ++i) {
      GasStream hot = circ.outlet;
      hot.T = circ.stage_t_out[i];
      auto ch = thermal_store_charge(hot, circ_in.T, cfg.store_fluid_c, ref.T0,
                                     circ.stage_t_out[i] - cfg.store_pinch,
                                     cfg.store_recovery, pt);
      ch.report.id = "lt_store_charge_circ_stage" + std::to_string(i + 1);
      lt_charge_duty += ch.heat_in;
      lt_stored += ch.stored;
      comps.push_back(ch.report);
    }
    closure.losses.push_back({"lt_store_loss", lt_charge_duty - lt_stored});

    // Storage release through the expander train; cold outlet feeds the ORC
    // condenser.
    GasStream exp_in = GasStream::pure(Species::H2, n_total, cfg.storage_temp,
                                       cfg.storage_pressure);
    auto ex = expander_train(exp_in, make_stages(cfg.exp_ratios, cfg.exp_etas),
                             1.0e5, pt);
    w_exp = ex.electricity;
    ex_exp_out = ex.report.exergy.total_out();
    comps.push_back(ex.report);

    // ORC draws the full low-temperature inventory; ambient air supplies the
    // configured evaporator share.
    q_ambient = lt_stored * cfg.orc_ambient_fraction / (1.0 - cfg.orc_ambient_fraction);
    auto orc = orc_cycle(lt_stored, q_ambient, cfg.orc_c_r32, cfg.orc_t1, cfg.orc_t2,
                         cfg.orc_t4, ex.outlet.T, pt);
    w_orc = orc.electricity;
    ex_orc_out = orc.report.exergy.total_out();
    closure.inputs.push_back({"orc_ambient_heat", q_ambient});
    closure.losses.push_back(
        {"orc_condenser_rejection_net_of_cold", orc.rejected_heat - w_exp});
    comps.push_back(orc.report);

    // Plasma heating of the full furnace feed from ambient to the set point.
    GasStream pla_in = GasStream::pure(Species::H2, n_total, ref.T0, cfg.furnace_pressure);
    auto pla = plasma_heat(pla_in, cfg.t_reduction_gas, cfg.eta_plasma, cfg.plasma_re1,
                           cfg.plasma_t_max, pt);
    heater_w = pla.w_in;
    heater_ex = pla.report.exergy.total_in();
    electricity_total += pla.w_in;
    closure.inputs.push_back({"plasma_electricity", pla.w_in});
    closure.losses.push_back({"plasma_loss", pla.report.loss_total()});
    comps.push_back(pla.report);

    if (cfg.kind == ScenarioKind::Grid)
      co2_kg = electricity_total / 3.6e9 * cfg.grid_factor * 1000.0;
  } else {
    // Traditional train: purchased H2/CO mix, coke-oven-gas fired heater,
    // single-stage recycle compression back to the furnace line.
    GasStream supply = reduction_mix(n_total, h2s, cfg.supply_temp, top_line_p);
    supply_w = gas_chemical_energy(supply, pt);
    supply_ex = gas_chemical_exergy(supply, pt);
    ComponentReport sup;
    sup.id = "gas_supply";
    sup.energy.add_in("purchased_gas_chemical", supply_w);
    sup.energy.add_out("gas_stream", supply_w);
    sup.exergy.add_in("purchased_gas", supply_ex);
    sup.exergy.add_out("gas_stream", supply_ex);
    sup.verify();
    closure.inputs.push_back({"purchased_gas_chemical", supply_w});
    comps.push_back(sup);

    CokeOvenGas cog{cfg.cog_h2, cfg.cog_ch4, cfg.cog_co};
    auto comb = combustion_furnace(supply, cfg.t_reduction_gas, cfg.eta_comb, cog, pt);
    heater_w = comb.fuel_energy;
    heater_ex = comb.report.exergy.total_in();
    co2_kg += comb.co2_kg;
    co_heat += comb.co_heat;
    closure.inputs.push_back({"combustion_fuel", comb.fuel_energy});
    closure.losses.push_back({"combustion_loss", comb.report.loss_total()});
    comps.push_back(comb.report);

    const double recycle_ratio = cfg.furnace_pressure / top_line_p;
    GasStream circ_in = reduction_mix(n2, h2s, cfg.supply_temp, top_line_p);
    auto circ = compressor_train(circ_in, {{recycle_ratio, cfg.circ_etas.front()}}, pt);
    circ.report.id = "compressor_recycle";
    w_comp_total += circ.w_in;
    electricity_total += circ.w_in;
    closure.inputs.push_back({"compressor_recycle_electricity", circ.w_in});
    // No low-temperature store in this train; stage heat is rejected.
    closure.losses.push_back({"recycle_heat_rejected", circ.intercool_heat});
    comps.push_back(circ.report);

    // Reduction CO2 leaves with the top gas.
    co2_kg += st.co2_mol * pt.molar_mass(Species::CO2);
    co_heat += st.fe_reduced_mol * (1.0 - h2s) * std::abs(cfg.dh_red_co);
  }

  comps.push_back(fl.report);
  closure.inputs.push_back({"ore_physical", fl.report.energy.in("ore_physical")});
  closure.inputs.push_back({"ore_chemical", fl.report.energy.in("ore_chemical")});
  for (const auto& l : fl.report.losses) closure.losses.push_back(l);

  // Furnace top-gas heat into the high-temperature store, then delivered.
  const auto& top = fl.streams.top_gas;
  double ts_delivered = 0.0, ex_ts_out = 0.0;
  if (top.n > 0.0 && top.T > ref.T0) {
    auto ht = thermal_store_charge(top, ref.T0, cfg.store_fluid_c, ref.T0,
                                   top.T - cfg.store_pinch, cfg.store_recovery, pt);
    ht.report.id = "ht_store_charge";
    comps.push_back(ht.report);
    closure.losses.push_back({"ht_store_loss", ht.heat_in - ht.stored});

    auto dis = thermal_store_discharge(
        ht.stored, ht.stored, cfg.store_fluid_c, top.T - cfg.store_pinch, ref.T0,
        ref.T0, top.T - 2.0 * cfg.store_pinch, 0.0, pt);
    dis.report.id = "ht_store_discharge";
    ts_delivered = dis.heat_out;
    ex_ts_out = dis.report.exergy.total_out();
    comps.push_back(dis.report);
  }

  rep.topgas_recovery = ts_delivered;
  rep.expander_electricity = w_exp;
  rep.orc_electricity = w_orc;
  rep.co_heat = co_heat;
  rep.co2_t = co2_kg / 1000.0;
  rep.electricity_in_total = electricity_total;

  // Closure outputs.
  closure.outputs.push_back({"ht_store_delivered", ts_delivered});
  if (electric) {
    closure.outputs.push_back({"expander_electricity", w_exp});
    closure.outputs.push_back({"orc_electricity", w_orc});
  }
  closure.outputs.push_back({"dri_physical", fl.w_dri_out_ph});
  closure.outputs.push_back({"dri_chemical", fl.w_dri_out_ch});
  closure.outputs.push_back({"product_vapor_chemical", fl.w_prod_ch});
  closure.outputs.push_back({"circulating_gas_chemical", fl.w_ch2_ch});

  // Aggregates. The waste-heat outputs are dropped from the indices when the
  // recovery train is switched off in the configuration.
  const double eta_gas =
      cfg.eta_gas_override >= 0.0 ? cfg.eta_gas_override : st.n1 / n_total;
  const double waste_w = cfg.waste_heat_recovery ? ts_delivered + w_exp + w_orc : 0.0;
  const double waste_ex = cfg.waste_heat_recovery ? ex_ts_out + ex_exp_out + ex_orc_out : 0.0;

  auto& agg = rep.agg;
  agg.w_vsys_in = supply_w + w_comp_total + heater_w + fl.w_ore_in;
  agg.w_sys_in = supply_w * eta_gas + w_comp_total + heater_w + fl.w_ore_in;
  agg.w_vsys_out = waste_w + fl.w_dri_out_ph + fl.w_dri_out_ch + fl.w_ch2_ch + fl.w_prod_ch;
  agg.w_sys_out = agg.w_vsys_out - fl.w_ch2_ch;
  agg.ex_vsys_in = supply_ex + w_comp_total + heater_ex + fl.ex_ore_in;
  agg.ex_sys_in = supply_ex * eta_gas + w_comp_total + heater_ex + fl.ex_ore_in;
  agg.ex_sys_out = waste_ex + fl.ex_dri_out + fl.ex_prod_ch;
  agg.ex_vsys_out = agg.ex_sys_out + fl.ex_ch2_ch;

  CarbonBlock cb;
  cb.c_dri = rep.co2_t;
  cb.c_base = cfg.c_base;
  cb.p_co2 = cfg.p_co2;
  cb.m_energy = cfg.elec_price / 3.6e6; // CNY/kWh -> CNY/J
  cb.theta = cfg.penalty_enabled ? cfg.theta : 1.0;
  cb.nu = cfg.penalty_enabled ? cfg.nu : 1.0;

  rep.eff = evaluate_metrics(agg, cb, st.n1, n2);
  return rep;
}

std::vector<SystemReport> solve_sweep(const ScenarioConfig& base,
                                      const std::vector<double>& temps) {
  std::vector<SystemReport> out;
  out.reserve(temps.size());
  for (double t : temps) {
    ScenarioConfig c = base;
    c.t_reduction_gas = t;
    out.push_back(solve_scenario(c));
  }
  return out;
}

} // namespace h2dri
