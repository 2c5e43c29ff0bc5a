#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "h2dri/csv.hpp"
#include "h2dri/flowsheet.hpp"
#include "h2dri/metrics.hpp"
#include "h2dri/thermo.hpp"

namespace py = pybind11;
using namespace h2dri;

namespace {

ScenarioConfig config_from_kwargs(const std::string& scenario, double t,
                                  const std::string& config_file,
                                  const py::dict& overrides) {
  ScenarioConfig cfg;
  if (!config_file.empty()) cfg.apply_file(config_file);
  cfg.kind = scenario_from_name(scenario);
  if (t > 0.0) cfg.t_reduction_gas = t;
  for (auto item : overrides) {
    const std::string full = py::cast<std::string>(item.first);
    const auto dot = full.find('.');
    if (dot == std::string::npos)
      throw std::invalid_argument("override keys use 'section.key' form: " + full);
    cfg.apply_override(full.substr(0, dot), full.substr(dot + 1),
                       py::cast<std::string>(py::str(item.second)), "<override>");
  }
  return cfg;
}

py::dict report_to_dict(const SystemReport& r) {
  py::dict d;
  d["scenario"] = scenario_name(r.kind);
  d["T_in_K"] = r.t_in;
  d["n1_mol"] = r.n1;
  d["n2_mol"] = r.n2;
  d["eta_H2"] = r.eff.eta_h2;
  d["T_topgas_K"] = r.t_topgas;
  d["T_DRI_K"] = r.t_dri;
  d["W_in_J"] = r.agg.w_sys_in;
  d["W_out_J"] = r.agg.w_sys_out;
  d["EX_in_J"] = r.agg.ex_sys_in;
  d["EX_out_J"] = r.agg.ex_sys_out;
  d["W_vin_J"] = r.agg.w_vsys_in;
  d["W_vout_J"] = r.agg.w_vsys_out;
  d["CO2_t"] = r.co2_t;
  d["CET_J"] = r.eff.cet;
  d["EE"] = r.eff.ee;
  d["EXE"] = r.eff.exe;
  d["EC"] = r.eff.ec;
  d["eta_ven"] = r.eff.eta_ven;
  d["orc_electricity_J"] = r.orc_electricity;
  d["expander_electricity_J"] = r.expander_electricity;
  d["topgas_recovery_J"] = r.topgas_recovery;
  d["co_heat_J"] = r.co_heat;
  d["closure_residual"] = r.closure.residual();
  d["fp_iterations"] = r.fp_iterations;
  py::dict comps;
  for (const auto& c : r.components) {
    py::dict cd;
    cd["energy_in"] = c.energy.total_in();
    cd["energy_out"] = c.energy.total_out();
    cd["exergy_in"] = c.exergy.total_in();
    cd["exergy_out"] = c.exergy.total_out();
    cd["loss"] = c.loss_total();
    comps[py::str(c.id)] = cd;
  }
  d["components"] = comps;
  return d;
}

GasStream stream_from(const std::string& species, double n, double T, double P) {
  return GasStream::pure(species_from_name(species), n, T, P);
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "hydrogen direct-reduction flowsheet core";

  m.def(
      "solve_scenario",
      [](const std::string& scenario, double t, const std::string& config_file,
         const py::dict& overrides) {
        return report_to_dict(
            solve_scenario(config_from_kwargs(scenario, t, config_file, overrides)));
      },
      py::arg("scenario") = "zero-carbon", py::arg("t") = 0.0,
      py::arg("config_file") = "", py::arg("overrides") = py::dict());

  m.def(
      "run_sweep",
      [](const std::string& scenario, std::vector<double> temps,
         const std::string& config_file, const py::dict& overrides) {
        py::list out;
        for (double t : temps)
          out.append(report_to_dict(
              solve_scenario(config_from_kwargs(scenario, t, config_file, overrides))));
        return out;
      },
      py::arg("scenario"), py::arg("temps"), py::arg("config_file") = "",
      py::arg("overrides") = py::dict());

  m.def(
      "gas_physical_energy",
      [](const std::string& species, double n, double T, double P) {
        const auto pt = PropertyTable::builtin();
        return gas_physical_energy(stream_from(species, n, T, P), pt);
      },
      py::arg("species"), py::arg("n"), py::arg("T"), py::arg("P") = 101325.0);

  m.def(
      "gas_physical_exergy",
      [](const std::string& species, double n, double T, double P) {
        const auto pt = PropertyTable::builtin();
        return gas_physical_exergy(stream_from(species, n, T, P), pt);
      },
      py::arg("species"), py::arg("n"), py::arg("T"), py::arg("P") = 101325.0);

  m.def(
      "gas_chemical_energy",
      [](const std::string& species, double n) {
        const auto pt = PropertyTable::builtin();
        return gas_chemical_energy(stream_from(species, n, 298.0, 101325.0), pt);
      },
      py::arg("species"), py::arg("n"));

  m.def(
      "gas_chemical_exergy",
      [](const std::string& species, double n) {
        const auto pt = PropertyTable::builtin();
        return gas_chemical_exergy(stream_from(species, n, 298.0, 101325.0), pt);
      },
      py::arg("species"), py::arg("n"));

  m.def("carbon_equivalent", [](double c_dri, double c_base, double p_co2,
                                double m_energy, double theta, double nu) {
    CarbonBlock b{c_dri, c_base, p_co2, m_energy, theta, nu};
    const auto ce = carbon_equivalent(b);
    py::dict d;
    d["phi_ce"] = ce.phi_ce;
    d["CE"] = ce.ce;
    d["CET"] = ce.cet;
    return d;
  });
}
