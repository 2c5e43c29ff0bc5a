#include "h2dri/config.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace h2dri {

const char* scenario_name(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::ZeroCarbon: return "zero-carbon";
    case ScenarioKind::Traditional64: return "trad-64";
    case ScenarioKind::Traditional82: return "trad-82";
    case ScenarioKind::Grid: return "grid";
  }
  return "?";
}

ScenarioKind scenario_from_name(const std::string& name) {
  if (name == "zero-carbon") return ScenarioKind::ZeroCarbon;
  if (name == "trad-64") return ScenarioKind::Traditional64;
  if (name == "trad-82") return ScenarioKind::Traditional82;
  if (name == "grid") return ScenarioKind::Grid;
  throw std::invalid_argument("unknown scenario: " + name);
}

double ScenarioConfig::h2_share() const {
  switch (kind) {
    case ScenarioKind::Traditional64: return 0.6;
    case ScenarioKind::Traditional82: return 0.8;
    default: return 1.0;
  }
}

PropertyTable ScenarioConfig::make_property_table() const {
  PropertyTable t =
      property_file.empty() ? PropertyTable::builtin() : PropertyTable::load(property_file);
  for (const auto& ov : property_overrides) {
    auto& r = t.record(ov.species);
    switch (ov.column) {
      case 'M': r.molar_mass = ov.value; break;
      case 'c': r.cp = ov.value; break;
      case 'g': r.gamma = ov.value; break;
      case 'L': r.lhv = ov.value; break;
      case 'd': r.dg = ov.value; break;
      case 'E': r.ex = ov.value; break;
    }
  }
  return t;
}

void ScenarioConfig::validate() const {
  if (dri_batch_kg <= 0.0) throw std::invalid_argument("dri_batch_kg must be positive");
  if (t_reduction_gas < 1023.0 || t_reduction_gas > 1273.0)
    throw std::invalid_argument("t_reduction_gas must lie in [1023, 1273] K");
  if (w_fe <= 0.0 || w_fe > 1.0) throw std::invalid_argument("w_fe must lie in (0, 1]");
  if (eta_fe_h2 <= 0.0 || eta_fe_h2 > 1.0)
    throw std::invalid_argument("eta_fe_h2 must lie in (0, 1]");
  if (v_cell < v_thermoneutral)
    throw std::invalid_argument("cell voltage below thermoneutral voltage");
  if (porosity <= 0.0 || porosity >= 1.0)
    throw std::invalid_argument("porosity must lie in (0, 1)");
  if (water_factor < 0.0) throw std::invalid_argument("water_factor must be >= 0");
  auto check_stages = [](const std::vector<double>& r, const std::vector<double>& e,
                         const char* what) {
    if (r.empty() || r.size() != e.size())
      throw std::invalid_argument(std::string(what) + ": ratio/efficiency lists mismatch");
    for (double v : r)
      if (v <= 1.0)
        throw std::invalid_argument(std::string(what) + ": stage ratio must exceed 1");
    for (double v : e)
      if (v <= 0.0 || v > 1.0)
        throw std::invalid_argument(std::string(what) + ": stage efficiency must lie in (0, 1]");
  };
  check_stages(red_ratios, red_etas, "reduction compressor");
  check_stages(circ_ratios, circ_etas, "circle compressor");
  check_stages(exp_ratios, exp_etas, "expander");
  for (double v : red_ratios)
    if (v > 5.0) throw std::invalid_argument("compression ratio above 5 per stage");
  for (double v : circ_ratios)
    if (v > 5.0) throw std::invalid_argument("compression ratio above 5 per stage");
  if (orc_t1 <= orc_t2) throw std::invalid_argument("ORC: T1 must exceed T2");
  if (orc_t4 >= orc_t1) throw std::invalid_argument("ORC: T4 must lie below T1");
  if (orc_ambient_fraction < 0.0 || orc_ambient_fraction >= 1.0)
    throw std::invalid_argument("orc_ambient_fraction must lie in [0, 1)");
  if (cog_h2 + cog_ch4 + cog_co > 1.0 + 1e-12)
    throw std::invalid_argument("coke-oven-gas fractions exceed 1");
  if (theta < 1.0 || nu < theta)
    throw std::invalid_argument("penalty factors need 1 <= theta <= nu");
  if (c_base < 0.0 || p_co2 < 0.0) throw std::invalid_argument("carbon block values must be >= 0");
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<double> parse_list(const std::string& v, const std::string& where) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(trim(item)));
    } catch (...) {
      throw std::invalid_argument(where + ": bad numeric list element '" + item + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument(where + ": empty list");
  return out;
}

bool parse_bool(const std::string& v, const std::string& where) {
  if (v == "true" || v == "1" || v == "on") return true;
  if (v == "false" || v == "0" || v == "off") return false;
  throw std::invalid_argument(where + ": expected boolean, got '" + v + "'");
}

} // namespace

void ScenarioConfig::apply_override(const std::string& section, const std::string& key,
                                    const std::string& value, const std::string& where) {
  const std::string full = section.empty() ? key : section + "." + key;
  auto num = [&]() {
    try {
      return std::stod(value);
    } catch (...) {
      throw std::invalid_argument(where + ": expected number for " + full);
    }
  };
  auto integer = [&]() { return static_cast<int>(num()); };

  // One branch per key; unknown keys are hard errors.
  if (section == "scenario") {
    if (key == "kind") { kind = scenario_from_name(value); return; }
    if (key == "dri_batch_kg") { dri_batch_kg = num(); return; }
    if (key == "t_reduction_gas") { t_reduction_gas = num(); return; }
    if (key == "batch_time_s") { batch_time_s = num(); return; }
    if (key == "waste_heat_recovery") { waste_heat_recovery = parse_bool(value, where); return; }
    if (key == "penalty_enabled") { penalty_enabled = parse_bool(value, where); return; }
    if (key == "eta_gas_override") { eta_gas_override = num(); return; }
    if (key == "property_file") { property_file = value; return; }
  } else if (section == "furnace") {
    if (key == "w_fe") { w_fe = num(); return; }
    if (key == "eta_fe_h2") { eta_fe_h2 = num(); return; }
    if (key == "eta1") { eta1 = num(); return; }
    if (key == "eta2") { eta2 = num(); return; }
    if (key == "dust_fraction") { dust_fraction = num(); return; }
    if (key == "water_factor") { water_factor = num(); return; }
    if (key == "gangue_fraction") { gangue_fraction = num(); return; }
    if (key == "c_ore") { c_ore = num(); return; }
    if (key == "c_dri") { c_dri = num(); return; }
    if (key == "c_dust") { c_dust = num(); return; }
    if (key == "t_ore") { t_ore = num(); return; }
    if (key == "furnace_pressure") { furnace_pressure = num(); return; }
    if (key == "dh_red_h2") { dh_red_h2 = num(); return; }
    if (key == "dh_red_co") { dh_red_co = num(); return; }
  } else if (section == "kinetics") {
    if (key == "bed_length") { bed_length = num(); return; }
    if (key == "bed_diameter") { bed_diameter = num(); return; }
    if (key == "pellet_diameter") { pellet_diameter = num(); return; }
    if (key == "porosity") { porosity = num(); return; }
    if (key == "h_wall") { h_wall = num(); return; }
    if (key == "h_wall_u_ref") { h_wall_u_ref = num(); return; }
    if (key == "h_wall_u_exp") { h_wall_u_exp = num(); return; }
    if (key == "rk_steps") { rk_steps = integer(); return; }
    if (key == "shoot_tol") { shoot_tol = num(); return; }
    if (key == "shoot_max_iters") { shoot_max_iters = integer(); return; }
    if (key == "mu_ref_h2") { mu_ref_h2 = num(); return; }
    if (key == "k_ref_h2") { k_ref_h2 = num(); return; }
    if (key == "mu_ref_co") { mu_ref_co = num(); return; }
    if (key == "k_ref_co") { k_ref_co = num(); return; }
    if (key == "mu_exponent") { mu_exponent = num(); return; }
    if (key == "k_exponent") { k_exponent = num(); return; }
  } else if (section == "components") {
    if (key == "n_cells") { n_cells = integer(); return; }
    if (key == "v_cell") { v_cell = num(); return; }
    if (key == "t_electrolyzer_out") { t_electrolyzer_out = num(); return; }
    if (key == "red_ratios") { red_ratios = parse_list(value, where); return; }
    if (key == "red_etas") { red_etas = parse_list(value, where); return; }
    if (key == "circ_ratios") { circ_ratios = parse_list(value, where); return; }
    if (key == "circ_etas") { circ_etas = parse_list(value, where); return; }
    if (key == "exp_ratios") { exp_ratios = parse_list(value, where); return; }
    if (key == "exp_etas") { exp_etas = parse_list(value, where); return; }
    if (key == "storage_pressure") { storage_pressure = num(); return; }
    if (key == "storage_temp") { storage_temp = num(); return; }
    if (key == "store_recovery") { store_recovery = num(); return; }
    if (key == "store_pinch") { store_pinch = num(); return; }
    if (key == "eta_plasma") { eta_plasma = num(); return; }
    if (key == "plasma_re1") { plasma_re1 = num(); return; }
    if (key == "plasma_t_max") { plasma_t_max = num(); return; }
    if (key == "store_fluid_c") { store_fluid_c = num(); return; }
  } else if (section == "orc") {
    if (key == "c_r32") { orc_c_r32 = num(); return; }
    if (key == "t1") { orc_t1 = num(); return; }
    if (key == "t2") { orc_t2 = num(); return; }
    if (key == "t4") { orc_t4 = num(); return; }
    if (key == "ambient_fraction") { orc_ambient_fraction = num(); return; }
  } else if (section == "traditional") {
    if (key == "eta_comb") { eta_comb = num(); return; }
    if (key == "cog_h2") { cog_h2 = num(); return; }
    if (key == "cog_ch4") { cog_ch4 = num(); return; }
    if (key == "cog_co") { cog_co = num(); return; }
    if (key == "supply_temp") { supply_temp = num(); return; }
  } else if (section == "carbon") {
    if (key == "p_co2") { p_co2 = num(); return; }
    if (key == "c_base") { c_base = num(); return; }
    if (key == "elec_price") { elec_price = num(); return; }
    if (key == "grid_factor") { grid_factor = num(); return; }
    if (key == "theta") { theta = num(); return; }
    if (key == "nu") { nu = num(); return; }
  } else if (section == "solver") {
    if (key == "fp_tol") { fp_tol = num(); return; }
    if (key == "fp_max_iters") { fp_max_iters = integer(); return; }
    if (key == "fp_damping") { fp_damping = num(); return; }
  } else if (section == "properties") {
    // Keys of the form <species>_<column>, e.g. Fe_dG, H2_cp, H2O_gamma.
    const auto us = key.rfind('_');
    if (us != std::string::npos) {
      const std::string spec_name = key.substr(0, us);
      const std::string col = key.substr(us + 1);
      Species sp;
      try {
        sp = species_from_name(spec_name);
      } catch (const std::out_of_range&) {
        throw std::invalid_argument(where + ": unknown species '" + spec_name + "'");
      }
      char c = 0;
      if (col == "M") c = 'M';
      else if (col == "cp") c = 'c';
      else if (col == "gamma") c = 'g';
      else if (col == "LHV") c = 'L';
      else if (col == "dG") c = 'd';
      else if (col == "Ex") c = 'E';
      else
        throw std::invalid_argument(where + ": unknown property column '" + col + "'");
      property_overrides.push_back({sp, c, num()});
      return;
    }
    throw std::invalid_argument(where + ": expected <species>_<column> key");
  } else {
    throw std::invalid_argument(where + ": unknown section [" + section + "]");
  }
  throw std::invalid_argument(where + ": unknown key '" + full + "'");
}

void ScenarioConfig::apply_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = path + ":" + std::to_string(lineno);
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument(where + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(where + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::invalid_argument(where + ": expected 'key = value'");
    apply_override(section, key, value, where);
  }
}

} // namespace h2dri
