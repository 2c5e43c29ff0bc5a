#ifndef H2DRI_KINETICS_HPP
#define H2DRI_KINETICS_HPP

#include <vector>

#include "h2dri/thermo.hpp"

// Counter-current gas-solid heat transfer through the reduction zone.
// z runs downward: solids enter at z = 0 (top), gas enters at z = L (bottom).

namespace h2dri {
namespace kinetics {

struct BedSpec {
  double porosity = 0.5;       // -
  double pellet_diameter = 0.012; // m
  double cross_section = 3.14;   // m^2
  double inner_diameter = 2.0;   // m
  double length = 8.0;           // m
  double gas_volumetric_flow = 0.3; // m^3/s at film conditions
  double gas_density = 0.15;     // kg/m^3
  double gas_viscosity = 1.8e-5; // Pa s
  double gas_conductivity = 0.3; // W/(m K)
  double gas_cp_mass = 14300.0;  // J/(kg K)
  double superficial_velocity = 0.1; // m/s
  double solids_mass_flow = 0.28;    // kg/s
  double solids_cp_mass = 600.0;     // J/(kg K)
  double wall_coefficient = 4.0;     // W/(m^2 K)

  void validate() const;
};

struct TransportNumbers {
  double reynolds = 0.0;
  double prandtl = 0.0;
  double h_p = 0.0; // gas-pellet coefficient, W/(m^2 K)
};

// Re = rho u d / mu; Pr = c mu / k; Nu = 2 + 0.39 Re^0.5 Pr^0.33.
TransportNumbers transport_numbers(const BedSpec& bed);

struct TemperatureProfile {
  std::vector<double> z;       // m, 0 at the top
  std::vector<double> t_gas;   // K
  std::vector<double> t_solid; // K
};

struct ProfileSolution {
  TemperatureProfile profile;
  double t_topgas = 0.0;  // gas at z = 0
  double t_dri = 0.0;     // solids at z = L
  double residual = 0.0;  // |T_gas(L) - imposed bottom value|, K
  int iterations = 0;
  // Quadrature check: gas enthalpy loss vs solids gain + wall loss, relative.
  double flux_imbalance = 0.0;
};

struct SolverOptions {
  int rk_steps = 800;
  double tol = 0.1; // K on the bottom gas boundary
  int max_iters = 100;
  double t_ambient = 298.0;
};

// Two-point BVP: T_gas fixed at z = L (bottom inlet), T_solid fixed at z = 0
// (top inlet); single shooting on the unknown top-gas temperature with
// secant updates.
ProfileSolution solve_profile(const BedSpec& bed, double t_gas_bottom,
                              double t_solid_top, const SolverOptions& opt);

} // namespace kinetics
} // namespace h2dri

#endif
