#ifndef H2DRI_LEDGER_HPP
#define H2DRI_LEDGER_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace h2dri {

struct LedgerEntry {
  std::string label;
  double value = 0.0; // J
};

struct Ledger {
  std::vector<LedgerEntry> inputs;
  std::vector<LedgerEntry> outputs;

  void add_in(const std::string& label, double v) { inputs.push_back({label, v}); }
  void add_out(const std::string& label, double v) { outputs.push_back({label, v}); }

  double total_in() const {
    double s = 0.0;
    for (const auto& e : inputs) s += e.value;
    return s;
  }
  double total_out() const {
    double s = 0.0;
    for (const auto& e : outputs) s += e.value;
    return s;
  }
  double find(const std::vector<LedgerEntry>& v, const std::string& label) const {
    for (const auto& e : v)
      if (e.label == label) return e.value;
    throw std::out_of_range("no ledger entry: " + label);
  }
  double in(const std::string& label) const { return find(inputs, label); }
  double out(const std::string& label) const { return find(outputs, label); }
};

// Per-component energy and exergy bookkeeping plus declared loss terms.
// Invariants checked by `verify`: finite entries, exergy out <= exergy in.
struct ComponentReport {
  std::string id;
  Ledger energy;
  Ledger exergy;
  std::vector<LedgerEntry> losses; // declared energy loss terms

  double loss_total() const {
    double s = 0.0;
    for (const auto& e : losses) s += e.value;
    return s;
  }
  double exergy_destruction() const {
    return exergy.total_in() - exergy.total_out();
  }

  void verify() const {
    auto check = [&](const std::vector<LedgerEntry>& v) {
      for (const auto& e : v)
        if (!std::isfinite(e.value))
          throw std::runtime_error(id + ": non-finite ledger entry " + e.label);
    };
    check(energy.inputs);
    check(energy.outputs);
    check(exergy.inputs);
    check(exergy.outputs);
    check(losses);
    if (exergy_destruction() < -1e-6 * std::max(1.0, exergy.total_in()))
      throw std::runtime_error(id + ": exergy output exceeds input");
  }
};

} // namespace h2dri

#endif
