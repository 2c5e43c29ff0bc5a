#include "h2dri/kinetics.hpp"

#include <cmath>
#include <stdexcept>

namespace h2dri {
namespace kinetics {

void BedSpec::validate() const {
  if (porosity <= 0.0 || porosity >= 1.0)
    throw std::invalid_argument("bed: porosity outside (0, 1)");
  const double positives[] = {pellet_diameter, cross_section, inner_diameter,
                              length, gas_volumetric_flow, gas_density,
                              gas_viscosity, gas_conductivity, gas_cp_mass,
                              superficial_velocity, solids_mass_flow,
                              solids_cp_mass};
  for (double v : positives)
    if (v <= 0.0)
      throw std::invalid_argument("bed: geometric/transport quantities must be positive");
  if (wall_coefficient < 0.0)
    throw std::invalid_argument("bed: negative wall coefficient");
}

TransportNumbers transport_numbers(const BedSpec& bed) {
  bed.validate();
  TransportNumbers t;
  t.reynolds = bed.gas_density * bed.superficial_velocity * bed.pellet_diameter /
               bed.gas_viscosity;
  t.prandtl = bed.gas_cp_mass * bed.gas_viscosity / bed.gas_conductivity;
  const double nu =
      2.0 + 0.39 * std::sqrt(t.reynolds) * std::pow(t.prandtl, 0.33);
  t.h_p = nu * bed.gas_conductivity / bed.pellet_diameter;
  return t;
}

namespace {

struct Rates {
  double a_gas = 0.0;  // pellet exchange, gas side, 1/m
  double b_gas = 0.0;  // wall loss, gas side, 1/m
  double a_solid = 0.0; // pellet exchange, solids side, 1/m
};

Rates bed_rates(const BedSpec& bed) {
  const auto tn = transport_numbers(bed);
  const double area = 6.0 * (1.0 - bed.porosity) / bed.pellet_diameter;
  const double gas_mass_flow = bed.gas_density * bed.gas_volumetric_flow;
  Rates r;
  r.a_gas = area * bed.cross_section / gas_mass_flow * tn.h_p / bed.gas_cp_mass;
  r.b_gas = M_PI * bed.inner_diameter / gas_mass_flow * bed.wall_coefficient /
            bed.gas_cp_mass;
  r.a_solid = area * bed.cross_section / bed.solids_mass_flow * tn.h_p /
              bed.solids_cp_mass;
  return r;
}

struct March {
  TemperatureProfile profile;
  double t_gas_end = 0.0;
  double t_solid_end = 0.0;
  double wall_loss_integral = 0.0; // per unit (mass flow * cp), K m
};

// RK4 march from the top (z = 0) down to z = L.
March integrate(const BedSpec& bed, const Rates& r, double t_gas_top,
                double t_solid_top, double t_ambient, int steps,
                bool keep_profile) {
  const double h = bed.length / steps;
  auto f = [&](double tg, double ts, double& dg, double& ds) {
    dg = r.a_gas * (tg - ts) + r.b_gas * (tg - t_ambient);
    ds = r.a_solid * (tg - ts);
  };

  March m;
  double tg = t_gas_top, ts = t_solid_top;
  if (keep_profile) {
    m.profile.z.reserve(steps + 1);
    m.profile.t_gas.reserve(steps + 1);
    m.profile.t_solid.reserve(steps + 1);
    m.profile.z.push_back(0.0);
    m.profile.t_gas.push_back(tg);
    m.profile.t_solid.push_back(ts);
  }
  double k1g, k1s, k2g, k2s, k3g, k3s, k4g, k4s;
  for (int i = 0; i < steps; ++i) {
    const double wall_before = tg - t_ambient;
    f(tg, ts, k1g, k1s);
    f(tg + 0.5 * h * k1g, ts + 0.5 * h * k1s, k2g, k2s);
    f(tg + 0.5 * h * k2g, ts + 0.5 * h * k2s, k3g, k3s);
    f(tg + h * k3g, ts + h * k3s, k4g, k4s);
    tg += h / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
    ts += h / 6.0 * (k1s + 2.0 * k2s + 2.0 * k3s + k4s);
    if (!std::isfinite(tg) || !std::isfinite(ts))
      throw std::runtime_error("kinetics: profile integration diverged "
                               "(stiff profile; raise rk_steps)");
    m.wall_loss_integral += 0.5 * h * (wall_before + (tg - t_ambient));
    if (keep_profile) {
      m.profile.z.push_back((i + 1) * h);
      m.profile.t_gas.push_back(tg);
      m.profile.t_solid.push_back(ts);
    }
  }
  m.t_gas_end = tg;
  m.t_solid_end = ts;
  return m;
}

} // namespace

ProfileSolution solve_profile(const BedSpec& bed, double t_gas_bottom,
                              double t_solid_top, const SolverOptions& opt) {
  bed.validate();
  if (t_gas_bottom <= t_solid_top)
    throw std::invalid_argument(
        "kinetics: hot gas must enter at the bottom above the solids feed temperature");
  const Rates r = bed_rates(bed);

  // Fixed-step RK4 stability guard on the fast relaxation mode.
  {
    const double tr = r.a_gas + r.b_gas - r.a_solid;
    const double disc = tr * tr + 4.0 * r.b_gas * r.a_solid;
    const double lam = 0.5 * (std::abs(tr) + std::sqrt(std::max(0.0, disc)));
    if (lam * bed.length / opt.rk_steps > 2.5)
      throw std::runtime_error(
          "kinetics: stiff profile for the configured step count; raise rk_steps");
  }

  // Shooting on the unknown top-gas temperature. The ODE system is linear in
  // the temperatures, so the bottom residual is affine in the guess and the
  // secant update lands exactly after two evaluations.
  double th0 = t_solid_top;
  double th1 = t_gas_bottom;
  auto residual = [&](double theta) {
    return integrate(bed, r, theta, t_solid_top, opt.t_ambient, opt.rk_steps, false)
               .t_gas_end -
           t_gas_bottom;
  };

  double r0 = residual(th0);
  double r1 = residual(th1);
  int iters = 2;
  double theta = th1, res = r1;
  while (std::abs(res) >= opt.tol) {
    if (iters >= opt.max_iters)
      throw std::runtime_error("kinetics: shooting failed to converge, last residual " +
                               std::to_string(res) + " K");
    const double denom = r1 - r0;
    if (denom == 0.0)
      throw std::runtime_error("kinetics: degenerate secant step");
    theta = th1 - r1 * (th1 - th0) / denom;
    res = residual(theta);
    th0 = th1;
    r0 = r1;
    th1 = theta;
    r1 = res;
    ++iters;
  }

  const March m = integrate(bed, r, theta, t_solid_top, opt.t_ambient,
                            opt.rk_steps, true);

  ProfileSolution sol;
  sol.profile = std::move(m.profile);
  sol.t_topgas = theta;
  sol.t_dri = m.t_solid_end;
  sol.residual = std::abs(m.t_gas_end - t_gas_bottom);
  sol.iterations = iters;

  const double gas_mass_flow = bed.gas_density * bed.gas_volumetric_flow;
  const double gas_loss = gas_mass_flow * bed.gas_cp_mass * (m.t_gas_end - theta);
  const double solid_gain =
      bed.solids_mass_flow * bed.solids_cp_mass * (m.t_solid_end - t_solid_top);
  const double wall_loss =
      M_PI * bed.inner_diameter * bed.wall_coefficient * m.wall_loss_integral;
  sol.flux_imbalance =
      std::abs(gas_loss - solid_gain - wall_loss) / std::max(1.0, std::abs(gas_loss));
  return sol;
}

} // namespace kinetics
} // namespace h2dri
