#include "h2dri/thermo.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace h2dri {

namespace {

const char* kNames[kSpeciesCount] = {
    "H2", "CO", "H2O", "CO2", "O2", "N2", "CH4",
    "Fe2O3", "Fe3O4", "FeO", "Fe", "gangue", "R32",
};

struct BuiltinRow {
  Species s;
  SpeciesRecord r;
};

// M [kg/mol], cp [J/(mol K)], gamma [-], LHV [J/mol], dG [J/mol], Ex [J/mol].
// LHV and the standard chemical exergies are standard-table values. The dG
// column holds the chemical-energy coefficients the ledgers apply to
// condensed products and product vapors; the Fe entries are effective values
// fitted at the reference operating point (see data/properties.dat header).
const BuiltinRow kBuiltin[] = {
    {Species::H2, {2.016e-3, 29.2, 1.41, 241.8e3, 0.0, 236.1e3}},
    {Species::CO, {28.010e-3, 30.2, 1.40, 283.0e3, 0.0, 275.1e3}},
    {Species::H2O, {18.015e-3, 37.5, 1.33, 0.0, 9.5e3, 9.5e3}},
    {Species::CO2, {44.010e-3, 44.2, 1.28, 0.0, 19.9e3, 19.9e3}},
    {Species::O2, {31.998e-3, 29.4, 1.40, 0.0, 0.0, 3.97e3}},
    {Species::N2, {28.014e-3, 29.1, 1.40, 0.0, 0.0, 0.72e3}},
    {Species::CH4, {16.043e-3, 35.7, 1.31, 802.3e3, 0.0, 831.7e3}},
    {Species::Fe2O3, {159.688e-3, 103.9, 0.0, 0.0, 16.5e3, 16.5e3}},
    {Species::Fe3O4, {231.533e-3, 150.7, 0.0, 0.0, 121.3e3, 121.3e3}},
    {Species::FeO, {71.844e-3, 49.9, 0.0, 0.0, 127.1e3, 127.1e3}},
    {Species::Fe, {55.845e-3, 25.1, 0.0, 0.0, 144.0e3, 100.0e3}},
    {Species::Gangue, {60.080e-3, 44.6, 0.0, 0.0, 0.0, 0.0}},
    {Species::R32, {52.024e-3, 42.9, 1.20, 0.0, 0.0, 0.0}},
};

} // namespace

const char* species_name(Species s) { return kNames[static_cast<int>(s)]; }

Species species_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kSpeciesCount; ++i) {
    if (name == kNames[i]) return static_cast<Species>(i);
  }
  throw std::out_of_range("unknown species: " + name);
}

bool is_gas(Species s) {
  switch (s) {
    case Species::H2:
    case Species::CO:
    case Species::H2O:
    case Species::CO2:
    case Species::O2:
    case Species::N2:
    case Species::CH4:
    case Species::R32:
      return true;
    default:
      return false;
  }
}

PropertyTable PropertyTable::builtin() {
  PropertyTable t;
  for (const auto& row : kBuiltin) {
    t.records_[static_cast<int>(row.s)] = row.r;
    t.present_[static_cast<int>(row.s)] = true;
  }
  t.validate();
  return t;
}

void PropertyTable::validate() const {
  for (std::size_t i = 0; i < kSpeciesCount; ++i) {
    const auto s = static_cast<Species>(i);
    if (!present_[i])
      throw std::runtime_error(std::string("property record missing for ") +
                               kNames[i]);
    const auto& r = records_[i];
    if (r.molar_mass <= 0.0)
      throw std::runtime_error(std::string("non-positive molar mass for ") +
                               kNames[i]);
    if (r.cp <= 0.0)
      throw std::runtime_error(std::string("non-positive cp for ") + kNames[i]);
    if (is_gas(s) && r.gamma <= 1.0)
      throw std::runtime_error(std::string("gas gamma must exceed 1 for ") +
                               kNames[i]);
  }
}

PropertyTable PropertyTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open property file: " + path);
  PropertyTable t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // strip whitespace-only lines
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    std::string name;
    SpeciesRecord r;
    char comma;
    std::getline(ss, name, ',');
    const auto b = name.find_first_not_of(" \t");
    const auto e = name.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": empty species name");
    name = name.substr(b, e - b + 1);
    if (!(ss >> r.molar_mass >> comma >> r.cp >> comma >> r.gamma >> comma >>
          r.lhv >> comma >> r.dg >> comma >> r.ex))
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 'species, M, cp, gamma, LHV, dG, Ex'");
    Species s;
    try {
      s = species_from_name(name);
    } catch (const std::out_of_range&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown species '" + name + "'");
    }
    t.records_[static_cast<int>(s)] = r;
    t.present_[static_cast<int>(s)] = true;
  }
  t.validate();
  return t;
}

void PropertyTable::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write property file: " + path);
  out << "# species, M [kg/mol], cp [J/(mol K)], gamma [-], LHV [J/mol], "
         "dG [J/mol], Ex [J/mol]\n";
  for (std::size_t i = 0; i < kSpeciesCount; ++i) {
    const auto& r = records_[i];
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s, %.6g, %.6g, %.6g, %.6g, %.6g, %.6g\n",
                  kNames[i], r.molar_mass, r.cp, r.gamma, r.lhv, r.dg, r.ex);
    out << buf;
  }
}

const SpeciesRecord& PropertyTable::record(Species s) const {
  return records_[static_cast<int>(s)];
}

SpeciesRecord& PropertyTable::record(Species s) {
  return records_[static_cast<int>(s)];
}

double PropertyTable::gamma(Species s) const {
  const auto& r = record(s);
  if (r.gamma <= 1.0)
    throw std::domain_error(std::string("gamma undefined for condensed species ") +
                            species_name(s));
  return r.gamma;
}

double PropertyTable::gamma_cp(Species s) const {
  const double g = gamma(s);
  return g / (g - 1.0) * ref.R;
}

GasStream GasStream::pure(Species s, double n, double T, double P) {
  GasStream g;
  g.n = n;
  g.T = T;
  g.P = P;
  g.x[static_cast<int>(s)] = 1.0;
  g.validate();
  return g;
}

GasStream GasStream::binary(Species a, double xa, Species b, double n, double T,
                            double P) {
  GasStream g;
  g.n = n;
  g.T = T;
  g.P = P;
  g.x[static_cast<int>(a)] = xa;
  g.x[static_cast<int>(b)] = 1.0 - xa;
  g.validate();
  return g;
}

void GasStream::validate() const {
  if (n < 0.0) throw std::domain_error("gas stream: negative molar flow");
  if (T <= 0.0) throw std::domain_error("gas stream: non-positive temperature");
  if (P <= 0.0) throw std::domain_error("gas stream: non-positive pressure");
  double sum = 0.0;
  for (std::size_t i = 0; i < kSpeciesCount; ++i) {
    if (x[i] < 0.0) throw std::domain_error("gas stream: negative mole fraction");
    if (x[i] > 0.0 && !is_gas(static_cast<Species>(i)))
      throw std::domain_error("gas stream: condensed species in gas phase");
    sum += x[i];
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::domain_error("gas stream: mole fractions must sum to 1");
}

double gas_physical_energy(const GasStream& s, const PropertyTable& pt) {
  double coeff = 0.0;
  for (std::size_t i = 0; i < kSpeciesCount; ++i) {
    if (s.x[i] == 0.0) continue;
    coeff += s.x[i] * pt.gamma_cp(static_cast<Species>(i));
  }
  return s.n * coeff * (s.T - pt.ref.T0);
}

double gas_thermal_exergy(const GasStream& s, const PropertyTable& pt) {
  if (s.T <= 0.0) throw std::domain_error("thermal exergy: non-positive T");
  const double T0 = pt.ref.T0;
  double coeff = 0.0;
  for (std::size_t i = 0; i < kSpeciesCount; ++i) {
    if (s.x[i] == 0.0) continue;
    coeff += s.x[i] * pt.gamma_cp(static_cast<Species>(i));
  }
  return s.n * coeff * (s.T - T0 - T0 * std::log(s.T / T0));
}

double gas_physical_exergy(const GasStream& s, const PropertyTable& pt) {
  double ex = gas_thermal_exergy(s, pt);
  if (s.P != pt.ref.P0)
    ex += s.n * pt.ref.R * pt.ref.T0 * std::log(s.P / pt.ref.P0);
  return ex;
}

double gas_chemical_energy(const GasStream& s, const PropertyTable& pt) {
  double e = 0.0;
  for (std::size_t i = 0; i < kSpeciesCount; ++i) {
    if (s.x[i] == 0.0) continue;
    e += s.x[i] * pt.lhv(static_cast<Species>(i));
  }
  return s.n * e;
}

double gas_chemical_exergy(const GasStream& s, const PropertyTable& pt) {
  const auto& ref = pt.ref;
  double e = 0.0;
  for (std::size_t i = 0; i < kSpeciesCount; ++i) {
    const double xi = s.x[i];
    if (xi == 0.0) continue; // x ln x -> 0
    e += xi * pt.ex(static_cast<Species>(i)) + ref.R * ref.T0 * xi * std::log(xi);
  }
  return s.n * e;
}

double gas_chemical_energy_dg(const GasStream& s, const PropertyTable& pt) {
  double e = 0.0;
  for (std::size_t i = 0; i < kSpeciesCount; ++i) {
    if (s.x[i] == 0.0) continue;
    e += s.x[i] * pt.dg(static_cast<Species>(i));
  }
  return s.n * e;
}

double solid_physical_energy(double m, double c, double T, double T0) {
  return m * c * (T - T0);
}

double solid_physical_exergy(double m, double c, double T, double T0) {
  if (T <= 0.0) throw std::domain_error("solid exergy: non-positive T");
  return m * c * (T - T0 - T0 * std::log(T / T0));
}

} // namespace h2dri
