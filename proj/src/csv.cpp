#include "h2dri/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace h2dri {
namespace csvio {

const char* kResultsHeader =
    "scenario,T_in_K,n1_mol,n2_mol,eta_H2,T_topgas_K,T_DRI_K,W_in_J,W_out_J,"
    "EX_in_J,EX_out_J,CO2_t,CET_J,EE,EXE,EC,eta_ven";

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

} // namespace

std::string format_row(const ResultRow& row) {
  std::ostringstream os;
  os << row.scenario << ',' << fmt(row.t_in);
  if (row.failed) {
    for (int i = 0; i < 15; ++i) os << ",nan";
    return os.str();
  }
  const auto& r = row.report;
  const double cols[] = {r.n1,           r.n2,           r.eff.eta_h2,
                         r.t_topgas,     r.t_dri,        r.agg.w_sys_in,
                         r.agg.w_sys_out, r.agg.ex_sys_in, r.agg.ex_sys_out,
                         r.co2_t,        r.eff.cet,      r.eff.ee,
                         r.eff.exe,      r.eff.ec,       r.eff.eta_ven};
  for (double v : cols) os << ',' << fmt(v);
  return os.str();
}

void write_results(const std::string& path, const std::vector<ResultRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << kResultsHeader << '\n';
  for (const auto& r : rows) out << format_row(r) << '\n';
  bool any_failed = false;
  for (const auto& r : rows) any_failed |= r.failed;
  if (any_failed) {
    for (const auto& r : rows)
      if (r.failed)
        out << "# failed: " << r.scenario << " T=" << fmt(r.t_in) << " ("
            << r.failure << ")\n";
  }
}

void write_figure_files(const std::string& dir, const std::vector<ResultRow>& rows) {
  auto open = [&](const std::string& name) {
    std::ofstream f(dir + "/" + name, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + dir + "/" + name);
    return f;
  };
  auto rows_of = [&](const std::string& scen) {
    std::vector<const ResultRow*> v;
    for (const auto& r : rows)
      if (r.scenario == scen && !r.failed) v.push_back(&r);
    return v;
  };

  const struct {
    const char* scen;
    const char* file;
  } singles[] = {
      {"zero-carbon", "fig5_zero_carbon.csv"},
      {"trad-64", "fig6_trad_64.csv"},
      {"trad-82", "fig7_trad_82.csv"},
      {"grid", "fig16_grid.csv"},
  };
  for (const auto& s : singles) {
    const auto v = rows_of(s.scen);
    if (v.empty()) continue;
    auto f = open(s.file);
    f << "T_in_K,EE,EXE,EC,total_gas_mol\n";
    for (const auto* r : v)
      f << fmt(r->t_in) << ',' << fmt(r->report.eff.ee) << ','
        << fmt(r->report.eff.exe) << ',' << fmt(r->report.eff.ec) << ','
        << fmt(r->report.n1 + r->report.n2) << '\n';
  }

  // Cross-scenario comparison tables share the temperature grid.
  const char* scens[] = {"zero-carbon", "trad-64", "trad-82", "grid"};
  std::set<double> grid;
  for (const auto& r : rows)
    if (!r.failed) grid.insert(r.t_in);
  std::map<std::pair<std::string, double>, const ResultRow*> cell;
  for (const auto& r : rows)
    if (!r.failed) cell[{r.scenario, r.t_in}] = &r;

  const struct {
    const char* file;
    double (*pick)(const SystemReport&);
  } compares[] = {
      {"fig8_ee_compare.csv", [](const SystemReport& r) { return r.eff.ee; }},
      {"fig9_exe_compare.csv", [](const SystemReport& r) { return r.eff.exe; }},
      {"fig10_ec_compare.csv", [](const SystemReport& r) { return r.eff.ec; }},
  };
  for (const auto& cmp : compares) {
    std::vector<const char*> present;
    for (const char* s : scens)
      for (const auto& r : rows)
        if (!r.failed && r.scenario == s) {
          present.push_back(s);
          break;
        }
    if (present.size() < 2) continue;
    auto f = open(cmp.file);
    f << "T_in_K";
    for (const char* s : present) f << ',' << s;
    f << '\n';
    for (double t : grid) {
      f << fmt(t);
      for (const char* s : present) {
        auto it = cell.find({s, t});
        f << ',' << (it == cell.end() ? "nan" : fmt(cmp.pick(it->second->report)));
      }
      f << '\n';
    }
  }

  for (const auto& s : std::vector<std::pair<const char*, const char*>>{
           {"trad-64", "fig11_co_heat_64.csv"}, {"trad-82", "fig12_co_heat_82.csv"}}) {
    const auto v = rows_of(s.first);
    if (v.empty()) continue;
    auto f = open(s.second);
    f << "T_in_K,co_heat_J,CET_J\n";
    for (const auto* r : v)
      f << fmt(r->t_in) << ',' << fmt(r->report.co_heat) << ','
        << fmt(r->report.eff.cet) << '\n';
  }

  {
    const auto v = rows_of("zero-carbon");
    if (!v.empty()) {
      auto f = open("fig13_waste_heat.csv");
      f << "T_in_K,EE_with_recovery,EE_without_recovery\n";
      for (const auto* r : v)
        f << fmt(r->t_in) << ',' << fmt(r->report.eff.ee) << ','
          << fmt(r->ee_no_waste) << '\n';
      auto g = open("fig15_orc_vs_topgas.csv");
      g << "T_in_K,orc_plus_expander_J,topgas_recovery_J\n";
      for (const auto* r : v)
        g << fmt(r->t_in) << ','
          << fmt(r->report.orc_electricity + r->report.expander_electricity) << ','
          << fmt(r->report.topgas_recovery) << '\n';
    }
  }
}

void write_profile(const std::string& path, const kinetics::TemperatureProfile& p) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "z,T_gas,T_solid\n";
  for (std::size_t i = 0; i < p.z.size(); ++i)
    out << fmt(p.z[i]) << ',' << fmt(p.t_gas[i]) << ',' << fmt(p.t_solid[i]) << '\n';
}

namespace {

struct ParsedCsv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

ParsedCsv parse_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  ParsedCsv p;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) fields.push_back(item);
    if (first) {
      p.header = fields;
      first = false;
    } else {
      p.rows.push_back(fields);
    }
  }
  return p;
}

} // namespace

DiffResult diff_results(const std::string& path_a, const std::string& path_b,
                        double threshold) {
  DiffResult d;
  const auto a = parse_csv(path_a);
  const auto b = parse_csv(path_b);
  if (a.header != b.header || a.rows.size() != b.rows.size()) {
    d.grids_match = false;
    d.messages.push_back("header or row-count mismatch");
    return d;
  }
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto& ra = a.rows[i];
    const auto& rb = b.rows[i];
    if (ra.size() != rb.size() || ra.empty() || ra[0] != rb[0] ||
        (ra.size() > 1 && ra[1] != rb[1])) {
      d.grids_match = false;
      d.messages.push_back("grid mismatch at data row " + std::to_string(i + 1));
      return d;
    }
    for (std::size_t j = 2; j < ra.size(); ++j) {
      double va, vb;
      try {
        va = std::stod(ra[j]);
        vb = std::stod(rb[j]);
      } catch (...) {
        d.grids_match = false;
        d.messages.push_back("non-numeric cell at row " + std::to_string(i + 1));
        return d;
      }
      if (std::isnan(va) && std::isnan(vb)) continue;
      const double abs_d = std::abs(va - vb);
      const double rel_d = abs_d / std::max({std::abs(va), std::abs(vb), 1e-300});
      d.max_abs = std::max(d.max_abs, abs_d);
      d.max_rel = std::max(d.max_rel, rel_d);
      ++d.cells_compared;
      if (abs_d > threshold && rel_d > threshold) {
        ++d.cells_exceeding;
        if (d.messages.size() < 20)
          d.messages.push_back(a.header[j] + " at " + ra[0] + " T=" + ra[1] +
                               ": " + ra[j] + " vs " + rb[j]);
      }
    }
  }
  return d;
}

} // namespace csvio
} // namespace h2dri
