#pragma once

// FieldDump binary snapshots, 1-D slice CSVs and the diagnostics CSV.
//
// FieldDump layout: one ASCII header line of space-separated key=value
// pairs ending in '\n', then nx*ny records of 11 little-endian float64
// values (rho u v w p b1 b2 b3 E A B), row-major with x fastest.

#include <string>
#include <vector>

#include "lcdmhd/solver.hpp"

namespace lcdmhd {

inline constexpr int dump_format_version = 1;
inline constexpr int dump_record_size = 11;

/// Variable names in record order.
const std::vector<std::string>& dump_variables();

struct FieldDump {
  int version = dump_format_version;
  int nx = 0, ny = 0;
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  double time = 0.0;
  double gamma = 5.0 / 3.0;
  std::string variant;
  std::string problem;
  std::vector<double> data;  ///< nx*ny*11

  double value(int j, int k, int var) const {
    return data[(static_cast<std::size_t>(k) * nx + j) * dump_record_size + var];
  }
};

FieldDump make_dump(const AugField& f, double gamma, double time,
                    const std::string& variant, const std::string& problem);
/// Rebuilds an AugField (ghosts unfilled) from the conservative slots.
AugField field_from_dump(const FieldDump& d);

void write_dump(const FieldDump& d, const std::string& path);
FieldDump read_dump(const std::string& path);

/// Index of the cell centre nearest to `at` along the other axis; throws
/// ConfigError when `at` lies outside the domain.
int slice_index(const FieldDump& d, char axis, double at);

/// axis 'x': a row (varying x) at y = at; axis 'y': a column at x = at.
/// Columns: coordinate then the requested variables.
void write_slice_csv(const FieldDump& d, char axis, double at,
                     const std::vector<std::string>& vars,
                     const std::string& path);

void write_diagnostics_csv(const std::vector<DiagnosticsSample>& s,
                           const std::string& path);

}  // namespace lcdmhd
