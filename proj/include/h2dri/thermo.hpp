#ifndef H2DRI_THERMO_HPP
#define H2DRI_THERMO_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

// Thermophysical property data and stream-level energy/exergy primitives.
// All quantities SI: J, mol, kg, K, Pa. Energies are per batch, not rates.

namespace h2dri {

enum class Species : int {
  H2 = 0,
  CO,
  H2O,
  CO2,
  O2,
  N2,
  CH4,
  Fe2O3,
  Fe3O4,
  FeO,
  Fe,
  Gangue,
  R32,
};

inline constexpr std::size_t kSpeciesCount = 13;

const char* species_name(Species s);
Species species_from_name(const std::string& name);
bool is_gas(Species s);

struct SpeciesRecord {
  double molar_mass = 0.0;  // kg/mol
  double cp = 0.0;          // J/(mol K), constant
  double gamma = 0.0;       // heat-capacity ratio, 0 for condensed species
  double lhv = 0.0;         // J/mol, lower heating value (0 for non-fuels)
  double dg = 0.0;          // J/mol, chemical-energy coefficient for ledgers
  double ex = 0.0;          // J/mol, molar chemical exergy
};

// Fixed reference state and constants shared by every model.
struct ReferenceState {
  double R = 8.314;     // J/(mol K)
  double T0 = 298.0;    // K
  double P0 = 101325.0; // Pa
  double faraday = 96485.0; // C/mol e-
};

class PropertyTable {
public:
  // Built-in data set (standard-state values; see data/properties.dat).
  static PropertyTable builtin();

  // Line-oriented text file, one record per species:
  //   species, M, cp, gamma, LHV, dG, Ex
  // SI units, '#' starts a comment. Missing species fail construction.
  static PropertyTable load(const std::string& path);
  void save(const std::string& path) const;

  const SpeciesRecord& record(Species s) const;
  SpeciesRecord& record(Species s);

  double molar_mass(Species s) const { return record(s).molar_mass; }
  double cp(Species s) const { return record(s).cp; }
  double gamma(Species s) const;
  double lhv(Species s) const { return record(s).lhv; }
  double dg(Species s) const { return record(s).dg; }
  double ex(Species s) const { return record(s).ex; }

  // gamma/(gamma-1) * R: molar isobaric heat capacity of the ideal gas used
  // by the component ledgers.
  double gamma_cp(Species s) const;

  // Reduction-reaction enthalpy change, J per mol Fe (positive = endothermic).
  double dh_reduction_h2 = 49.4e3;
  double dh_reduction_co = -12.4e3;

  ReferenceState ref;

private:
  PropertyTable() = default;
  std::array<SpeciesRecord, kSpeciesCount> records_{};
  std::array<bool, kSpeciesCount> present_{};
  void validate() const;
};

// Gas mixture stream. Mole fractions are stored over the full species set;
// entries for condensed species must be zero.
struct GasStream {
  double n = 0.0;  // mol per batch
  double T = 298.0; // K
  double P = 101325.0; // Pa
  std::array<double, kSpeciesCount> x{}; // mole fractions, sum to 1

  static GasStream pure(Species s, double n, double T, double P);
  static GasStream binary(Species a, double xa, Species b, double n, double T,
                          double P);
  double fraction(Species s) const { return x[static_cast<int>(s)]; }
  void set_fraction(Species s, double v) { x[static_cast<int>(s)] = v; }
  void validate() const;
};

// Ore / DRI stream: mass basis, two mass fractions (iron-bearing phase and
// the remainder).
struct SolidStream {
  double m = 0.0;        // kg per batch
  double w_primary = 1.0; // mass fraction of the primary phase
  double T = 298.0;      // K
};

// --- stream-level primitives -------------------------------------------

// n * sum_i x_i * gamma_i/(gamma_i-1) * R * (T - T0). Negative below T0.
double gas_physical_energy(const GasStream& s, const PropertyTable& pt);

// Thermal part n * sum_i x_i * gamma_i/(gamma_i-1) * R * (T - T0 - T0 ln(T/T0))
// plus pressure part n * R * T0 * ln(P/P0) when P != P0.
double gas_physical_exergy(const GasStream& s, const PropertyTable& pt);
// Thermal part only (the furnace ledgers carry no pressure term).
double gas_thermal_exergy(const GasStream& s, const PropertyTable& pt);

// sum over combustible species of n * x_i * LHV_i.
double gas_chemical_energy(const GasStream& s, const PropertyTable& pt);

// n * (sum x_i Ex_i + R T0 sum x_i ln x_i); x_i = 0 terms are skipped.
double gas_chemical_exergy(const GasStream& s, const PropertyTable& pt);

// Ledger chemical-energy coefficient route (dG column).
double gas_chemical_energy_dg(const GasStream& s, const PropertyTable& pt);

// m * c * (T - T0) and the matching Carnot-degraded exergy.
double solid_physical_energy(double m, double c, double T, double T0);
double solid_physical_exergy(double m, double c, double T, double T0);

} // namespace h2dri

#endif
