#include "h2dri/components.hpp"

#include <cmath>
#include <stdexcept>

namespace h2dri {

namespace {

// Mixture gamma/(gamma-1)*R coefficient, J/(mol K).
double cp_gamma_mix(const GasStream& s, const PropertyTable& pt) {
  double c = 0.0;
  for (std::size_t i = 0; i < kSpeciesCount; ++i) {
    if (s.x[i] == 0.0) continue;
    c += s.x[i] * pt.gamma_cp(static_cast<Species>(i));
  }
  return c;
}

} // namespace

ElectrolyzerResult electrolyzer(int n_cells, double v_cell, double current,
                                double dt, double t_out, double p_out,
                                double v_thermoneutral, const PropertyTable& pt) {
  if (n_cells <= 0 || v_cell <= 0.0 || current <= 0.0 || dt <= 0.0)
    throw std::invalid_argument("electrolyzer: inputs must be positive");
  if (v_cell < v_thermoneutral)
    throw std::invalid_argument("electrolyzer: cell voltage below thermoneutral voltage");

  const auto& ref = pt.ref;
  const double w_in = n_cells * v_cell * current * dt;
  const double n_h2 = current * dt * n_cells / (2.0 * ref.faraday);

  const double lhv = pt.lhv(Species::H2);
  const double cp = pt.cp(Species::H2);
  const double w_out = lhv * n_h2 + n_h2 * cp * t_out;
  const double ex_out =
      lhv * n_h2 + n_h2 * cp * (t_out - ref.T0 - ref.T0 * std::log(t_out / ref.T0));

  ElectrolyzerResult r;
  r.w_in = w_in;
  r.hydrogen = GasStream::pure(Species::H2, n_h2, t_out, p_out);
  r.report.id = "electrolyzer";
  r.report.energy.add_in("electricity", w_in);
  r.report.energy.add_out("hot_hydrogen", w_out);
  r.report.losses.push_back({"dissipation", w_in - w_out});
  r.report.exergy.add_in("electricity", w_in);
  r.report.exergy.add_out("hot_hydrogen", ex_out);
  r.report.verify();
  return r;
}

CompressorResult compressor_train(const GasStream& inlet,
                                  const std::vector<StageSpec>& stages,
                                  const PropertyTable& pt) {
  if (stages.empty()) throw std::invalid_argument("compressor: empty stage list");
  const auto& ref = pt.ref;
  const double cpg = cp_gamma_mix(inlet, pt);
  const double expo = ref.R / cpg; // (gamma-1)/gamma

  CompressorResult r;
  r.outlet = inlet;
  r.report.id = "compressor";
  double w_total = 0.0, ex_out_total = 0.0;
  double p = inlet.P;
  const double t_in = inlet.T; // intercooled back to this after every stage
  for (const auto& st : stages) {
    if (st.ratio <= 1.0) throw std::invalid_argument("compressor: stage ratio must exceed 1");
    if (st.ratio > 5.0)
      throw std::invalid_argument("compressor: stage ratio above the 5:1 limit");
    if (st.eta <= 0.0 || st.eta > 1.0)
      throw std::invalid_argument("compressor: stage efficiency outside (0, 1]");
    const double rise = (std::pow(st.ratio, expo) - 1.0) / st.eta;
    const double t_out = t_in * (1.0 + rise);
    const double w = cpg * inlet.n * t_in * rise;
    const double ex_out =
        inlet.n * cpg * (t_out - t_in) -
        ref.T0 * (inlet.n * cpg * std::log(t_out / t_in) -
                  inlet.n * ref.R * std::log(st.ratio));
    w_total += w;
    ex_out_total += ex_out;
    r.stage_t_out.push_back(t_out);
    r.stage_work.push_back(w);
    p *= st.ratio;
  }
  r.w_in = w_total;
  r.intercool_heat = w_total; // intercooling to t_in returns all stage work as heat
  r.outlet.P = p;
  r.outlet.T = t_in;

  r.report.energy.add_in("electricity", w_total);
  r.report.energy.add_out("compressed_gas", w_total); // W_out = W_in
  r.report.exergy.add_in("electricity", w_total);
  r.report.exergy.add_out("compressed_gas", ex_out_total);
  r.report.verify();
  return r;
}

ExpanderResult expander_train(const GasStream& inlet,
                              const std::vector<StageSpec>& stages,
                              double p_outlet_min, const PropertyTable& pt) {
  if (stages.empty()) throw std::invalid_argument("expander: empty stage list");
  const auto& ref = pt.ref;
  const double cpg = cp_gamma_mix(inlet, pt);
  const double expo = ref.R / cpg;

  double p = inlet.P;
  for (const auto& st : stages) p /= st.ratio;
  if (p < p_outlet_min)
    throw std::invalid_argument("expander: outlet pressure below the configured minimum");

  ExpanderResult r;
  r.report.id = "expander";
  double w_total = 0.0, ex_in_total = 0.0;
  double t = inlet.T;
  p = inlet.P;
  for (const auto& st : stages) {
    // ratio == 1 degenerates to a pass-through stage (zero work).
    if (st.ratio < 1.0) throw std::invalid_argument("expander: stage ratio below 1");
    const double f = 1.0 - std::pow(st.ratio, -expo);
    const double w = cpg * inlet.n * t * f * st.eta;
    const double t_out = t * (1.0 - f * st.eta);
    const double ex_in =
        inlet.n * cpg * (t - t_out) -
        ref.T0 * (inlet.n * cpg * std::log(t / t_out) -
                  inlet.n * ref.R * std::log(st.ratio));
    w_total += w;
    ex_in_total += ex_in;
    r.stage_t_out.push_back(t_out);
    r.stage_work.push_back(w);
    t = t_out;
    p /= st.ratio;
  }
  r.electricity = w_total;
  r.outlet = inlet;
  r.outlet.T = t;
  r.outlet.P = p;

  r.report.energy.add_in("potential_power", w_total);
  r.report.energy.add_out("electricity", w_total); // W_in = W_out
  r.report.exergy.add_in("pressure_drop", ex_in_total);
  r.report.exergy.add_out("electricity", w_total);
  r.report.verify();
  return r;
}

StoreChargeResult thermal_store_charge(const GasStream& hot, double t_hot_out,
                                       double fluid_c, double fluid_t_in,
                                       double fluid_t_out, double recovery,
                                       const PropertyTable& pt) {
  const auto& ref = pt.ref;
  if (hot.T < t_hot_out)
    throw std::invalid_argument("store charge: hot stream below its outlet target");
  StoreChargeResult r;
  r.report.id = "store_charge";
  const double cpg = cp_gamma_mix(hot, pt);
  const double duty = cpg * hot.n * (hot.T - t_hot_out);
  if (duty == 0.0) {
    r.fluid_t_out = fluid_t_in;
    return r; // equal temperatures: nothing transferred, empty ledgers
  }
  if (fluid_t_out > hot.T)
    throw std::invalid_argument("store charge: fluid outlet would cross the hot inlet");
  if (fluid_t_out <= fluid_t_in)
    throw std::invalid_argument("store charge: fluid must heat up");

  const double stored = recovery * duty;
  const double m_f = stored / (fluid_c * (fluid_t_out - fluid_t_in));
  const double ex_in =
      cpg * hot.n * (hot.T - t_hot_out) -
      cpg * hot.n * ref.T0 * std::log(hot.T / t_hot_out);
  const double ex_out = m_f * fluid_c * (fluid_t_out - fluid_t_in) -
                        m_f * fluid_c * ref.T0 * std::log(fluid_t_out / fluid_t_in);

  r.heat_in = duty;
  r.stored = stored;
  r.fluid_t_out = fluid_t_out;
  r.report.energy.add_in("hot_stream_heat", duty);
  r.report.energy.add_out("stored_heat", stored);
  r.report.losses.push_back({"recovery_loss", duty - stored});
  r.report.exergy.add_in("hot_stream", ex_in);
  r.report.exergy.add_out("fluid", ex_out);
  r.report.verify();
  return r;
}

StoreDischargeResult thermal_store_discharge(double duty, double available,
                                             double fluid_c, double fluid_t_hot,
                                             double fluid_t_cold,
                                             double t_cold_in, double t_delivery,
                                             double n_gas,
                                             const PropertyTable& pt) {
  StoreDischargeResult r;
  r.report.id = "store_discharge";
  if (duty == 0.0) return r;
  if (duty < 0.0) throw std::invalid_argument("store discharge: negative duty");
  if (duty > available * (1.0 + 1e-12))
    throw std::runtime_error("store discharge: store depleted (requested more than stored)");
  if (t_delivery <= t_cold_in || fluid_t_hot <= fluid_t_cold)
    throw std::invalid_argument("store discharge: temperature levels inverted");

  const auto& ref = pt.ref;
  const double m_f = duty / (fluid_c * (fluid_t_hot - fluid_t_cold));
  const double cpg = pt.gamma_cp(Species::H2);
  if (n_gas <= 0.0) n_gas = duty / (cpg * (t_delivery - t_cold_in));

  const double ex_in = m_f * fluid_c * (fluid_t_hot - fluid_t_cold) -
                       m_f * fluid_c * ref.T0 * std::log(fluid_t_hot / fluid_t_cold);
  const double ex_out = n_gas * cpg * (t_delivery - t_cold_in) -
                        n_gas * cpg * ref.T0 * std::log(t_delivery / t_cold_in);

  r.heat_out = duty;
  r.report.energy.add_in("stored_heat", duty);
  r.report.energy.add_out("delivered_heat", duty);
  r.report.exergy.add_in("fluid", ex_in);
  r.report.exergy.add_out("heated_stream", ex_out);
  r.report.verify();
  return r;
}

OrcResult orc_cycle(double store_duty, double ambient_duty, double c_r32,
                    double t1, double t2, double t4, double sink_temperature,
                    const PropertyTable&) {
  OrcResult r;
  r.report.id = "orc";
  const double q_eva = store_duty + ambient_duty;
  if (q_eva == 0.0) return r;
  if (q_eva < 0.0) throw std::invalid_argument("orc: negative evaporator duty");
  if (!(t1 > t2 && t2 >= t4)) throw std::invalid_argument("orc: need T1 > T2 >= T4");
  if (sink_temperature >= t4)
    throw std::runtime_error("orc: condenser sink warmer than the condensing level");

  const double m = q_eva / (c_r32 * (t1 - t4));
  const double w = m * c_r32 * (t1 - t2);
  const double ex_out = m * c_r32 * (t1 - t2) - m * c_r32 * t2 * std::log(t1 / t2);

  r.electricity = w;
  r.m_r32 = m;
  r.rejected_heat = q_eva - w;
  r.report.energy.add_in("store_heat", store_duty);
  r.report.energy.add_in("ambient_heat", ambient_duty);
  r.report.energy.add_out("electricity", w);
  r.report.losses.push_back({"condenser_rejection", q_eva - w});
  r.report.exergy.add_in("evaporator_heat", q_eva);
  r.report.exergy.add_out("electricity", ex_out);
  r.report.verify();
  return r;
}

PlasmaResult plasma_heat(const GasStream& inlet, double t_target, double eta_pla,
                         double re1, double t_max, const PropertyTable& pt) {
  PlasmaResult r;
  r.report.id = "plasma";
  r.outlet = inlet;
  if (t_target <= inlet.T) return r; // no duty requested
  if (t_target > t_max)
    throw std::invalid_argument("plasma: target above the allowed heating range");

  const auto& ref = pt.ref;
  const double cpg = cp_gamma_mix(inlet, pt);
  const double duty = cpg * inlet.n * (t_target - inlet.T);
  const double w_in = duty / eta_pla;
  const double ex_in = (1.0 - re1) * duty; // (1 - Re1) * W_out
  const double ex_out =
      cpg * inlet.n * ((t_target - inlet.T) - ref.T0 * std::log(t_target / inlet.T));

  r.w_in = w_in;
  r.outlet.T = t_target;
  r.report.energy.add_in("electricity", w_in);
  r.report.energy.add_out("heated_gas", duty);
  r.report.losses.push_back({"plasma_loss", w_in - duty});
  r.report.exergy.add_in("electricity", ex_in);
  r.report.exergy.add_out("heated_gas", ex_out);
  r.report.verify();
  return r;
}

double CokeOvenGas::lhv(const PropertyTable& pt) const {
  return x_h2 * pt.lhv(Species::H2) + x_ch4 * pt.lhv(Species::CH4) +
         x_co * pt.lhv(Species::CO);
}

double CokeOvenGas::chemical_exergy(const PropertyTable& pt) const {
  const auto& ref = pt.ref;
  const double x_inert = 1.0 - x_h2 - x_ch4 - x_co;
  double e = x_h2 * pt.ex(Species::H2) + x_ch4 * pt.ex(Species::CH4) +
             x_co * pt.ex(Species::CO) + x_inert * pt.ex(Species::N2);
  for (double xi : {x_h2, x_ch4, x_co, x_inert})
    if (xi > 0.0) e += ref.R * ref.T0 * xi * std::log(xi);
  return e;
}

CombustionResult combustion_furnace(const GasStream& inlet, double t_target,
                                    double eta_comb, const CokeOvenGas& cog,
                                    const PropertyTable& pt) {
  CombustionResult r;
  r.report.id = "combustion_furnace";
  r.outlet = inlet;
  if (t_target <= inlet.T) return r;

  const auto& ref = pt.ref;
  const double cpg = cp_gamma_mix(inlet, pt);
  const double duty = cpg * inlet.n * (t_target - inlet.T);
  const double lhv = cog.lhv(pt);
  const double fuel = duty / (eta_comb * lhv);
  const double fuel_energy = fuel * lhv;

  r.outlet.T = t_target;
  r.fuel_mol = fuel;
  r.fuel_energy = fuel_energy;
  r.co2_kg = fuel * cog.co2_per_mol() * pt.molar_mass(Species::CO2);
  r.co_heat = fuel * cog.x_co * pt.lhv(Species::CO);

  const double ex_in = fuel * cog.chemical_exergy(pt);
  const double ex_out =
      cpg * inlet.n * ((t_target - inlet.T) - ref.T0 * std::log(t_target / inlet.T));

  r.report.energy.add_in("fuel", fuel_energy);
  r.report.energy.add_out("heated_gas", duty);
  r.report.losses.push_back({"combustion_loss", fuel_energy - duty});
  r.report.exergy.add_in("fuel", ex_in);
  r.report.exergy.add_out("heated_gas", ex_out);
  r.report.verify();
  return r;
}

} // namespace h2dri
