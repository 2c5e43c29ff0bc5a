#ifndef H2DRI_CSV_HPP
#define H2DRI_CSV_HPP

#include <optional>
#include <string>
#include <vector>

#include "h2dri/flowsheet.hpp"

// Sweep result emission and the regression diff. All numeric formatting is
// fixed so identical runs produce byte-identical files.

namespace h2dri {
namespace csvio {

// Column order of results.csv; energies in joules, temperatures in kelvin,
// efficiencies dimensionless.
extern const char* kResultsHeader;

struct ResultRow {
  std::string scenario;
  double t_in = 0.0;
  bool failed = false;
  std::string failure;       // diagnostic for failed cells
  SystemReport report;       // valid when !failed
  double ee_no_waste = 0.0;  // EE with the waste-heat outputs removed
};

std::string format_row(const ResultRow& row);
void write_results(const std::string& path, const std::vector<ResultRow>& rows);

// Per-figure data files derived from the same rows; written only for the
// scenarios present in the sweep.
void write_figure_files(const std::string& dir, const std::vector<ResultRow>& rows);

void write_profile(const std::string& path, const kinetics::TemperatureProfile& p);

struct DiffResult {
  bool grids_match = true;
  double max_abs = 0.0;
  double max_rel = 0.0;
  int cells_compared = 0;
  int cells_exceeding = 0;
  std::vector<std::string> messages;
};

// Compare two results.csv files cell by cell. NaN == NaN; a delta counts
// against the threshold on both absolute and relative scales.
DiffResult diff_results(const std::string& path_a, const std::string& path_b,
                        double threshold);

} // namespace csvio
} // namespace h2dri

#endif
