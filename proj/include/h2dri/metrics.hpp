#ifndef H2DRI_METRICS_HPP
#define H2DRI_METRICS_HPP

// Efficiency indicators: virtual/actual energy efficiency, exergy
// efficiency, hydrogen utilization and the carbon-cost-penalized
// energy-carbon efficiency.

namespace h2dri {

struct SystemAggregates {
  // Virtual aggregates: the gas supply counted in full, circulating-gas
  // chemical energy credited as an output.
  double w_vsys_in = 0.0;
  double w_vsys_out = 0.0;
  // Actual aggregates: supply scaled by the reduction-gas share, circulating
  // chemical energy excluded.
  double w_sys_in = 0.0;
  double w_sys_out = 0.0;
  double ex_sys_in = 0.0;
  double ex_sys_out = 0.0;
  double ex_vsys_in = 0.0;
  double ex_vsys_out = 0.0;
};

struct CarbonBlock {
  double c_dri = 0.0;    // t CO2 emitted per batch
  double c_base = 0.0;   // t CO2 allowance per batch
  double p_co2 = 0.0;    // CNY/t
  double m_energy = 0.0; // CNY/J energy baseline cost
  double theta = 1.2;    // penalty on (1, 1.2]
  double nu = 1.5;       // penalty above 1.2
};

struct CarbonEquivalent {
  double phi_ce = 0.0; // J, energy-carbon coupling factor
  double ce = 0.0;     // allowance-normalized emissions with penalty
  double cet = 0.0;    // J, energy equivalent of the carbon cost
};

struct EfficiencyReport {
  double eta_ven = 0.0; // virtual energy efficiency
  double ee = 0.0;      // actual energy efficiency
  double exe = 0.0;     // exergy efficiency
  double ec = 0.0;      // energy-carbon efficiency
  double eta_h2 = 0.0;  // reduction-gas share of the total gas
  double ce = 0.0;
  double cet = 0.0;     // J
};

// eta_ven = Wv_out/Wv_in, EE = W_out/W_in; zero denominators are errors.
void energy_efficiency(const SystemAggregates& agg, double& eta_ven, double& ee);

double exergy_efficiency(const SystemAggregates& agg);

// x = C_DRI / C_base; CE = x for x <= 1, theta*x on (1, 1.2], nu*x above.
CarbonEquivalent carbon_equivalent(const CarbonBlock& block);

// EC = (W_sys_out - CET) / W_sys_in; negative values are a valid signal.
double energy_carbon_efficiency(const SystemAggregates& agg, double cet);

double hydrogen_utilization(double n1, double n2);

EfficiencyReport evaluate_metrics(const SystemAggregates& agg,
                                  const CarbonBlock& block, double n1, double n2);

} // namespace h2dri

#endif
