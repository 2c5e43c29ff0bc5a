#include "h2dri/metrics.hpp"

#include <stdexcept>

namespace h2dri {

void energy_efficiency(const SystemAggregates& agg, double& eta_ven, double& ee) {
  if (agg.w_vsys_in <= 0.0 || agg.w_sys_in <= 0.0)
    throw std::domain_error("energy efficiency undefined: zero input");
  eta_ven = agg.w_vsys_out / agg.w_vsys_in;
  ee = agg.w_sys_out / agg.w_sys_in;
}

double exergy_efficiency(const SystemAggregates& agg) {
  if (agg.ex_sys_in <= 0.0)
    throw std::domain_error("exergy efficiency undefined: zero input");
  return agg.ex_sys_out / agg.ex_sys_in;
}

CarbonEquivalent carbon_equivalent(const CarbonBlock& block) {
  CarbonEquivalent ce;
  if (block.c_dri == 0.0) return ce; // zero emissions: CE = CET = 0
  if (block.c_base <= 0.0)
    throw std::invalid_argument("carbon: emissions without an allowance (C_base = 0)");
  if (block.m_energy <= 0.0)
    throw std::invalid_argument("carbon: non-positive energy baseline cost");

  const double x = block.c_dri / block.c_base;
  double multiplier = 1.0;
  if (x > 1.2)
    multiplier = block.nu;
  else if (x > 1.0)
    multiplier = block.theta;
  ce.ce = x * multiplier;
  ce.phi_ce = block.c_base * block.p_co2 / block.m_energy; // M_CO2 / M_energy
  ce.cet = ce.phi_ce * ce.ce;
  return ce;
}

double energy_carbon_efficiency(const SystemAggregates& agg, double cet) {
  if (agg.w_sys_in <= 0.0)
    throw std::domain_error("energy-carbon efficiency undefined: zero input");
  return (agg.w_sys_out - cet) / agg.w_sys_in;
}

double hydrogen_utilization(double n1, double n2) {
  if (n1 + n2 <= 0.0)
    throw std::domain_error("hydrogen utilization undefined: zero total gas");
  return n1 / (n1 + n2);
}

EfficiencyReport evaluate_metrics(const SystemAggregates& agg,
                                  const CarbonBlock& block, double n1, double n2) {
  EfficiencyReport r;
  energy_efficiency(agg, r.eta_ven, r.ee);
  r.exe = exergy_efficiency(agg);
  const auto ce = carbon_equivalent(block);
  r.ce = ce.ce;
  r.cet = ce.cet;
  r.ec = energy_carbon_efficiency(agg, ce.cet);
  r.eta_h2 = hydrogen_utilization(n1, n2);
  return r;
}

} // namespace h2dri
