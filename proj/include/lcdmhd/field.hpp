#pragma once

// Uniform cell-centred grid with two ghost layers and the augmented field
// (U, A, B) stored on it.

#include <string>
#include <vector>

#include "lcdmhd/state.hpp"

namespace lcdmhd {

struct Grid2D {
  static constexpr int ghosts = 2;

  int nx = 0;
  int ny = 0;
  double xmin = 0.0, xmax = 1.0;
  double ymin = 0.0, ymax = 1.0;

  Grid2D() = default;
  /// Throws ConfigError unless nx, ny >= 1 and the extents are ordered.
  Grid2D(int nx, int ny, double xmin, double xmax, double ymin, double ymax);

  double dx() const { return (xmax - xmin) / nx; }
  double dy() const { return (ymax - ymin) / ny; }
  double x(int j) const { return xmin + (j + 0.5) * dx(); }
  double y(int k) const { return ymin + (k + 0.5) * dy(); }

  int stride() const { return nx + 2 * ghosts; }
  int total() const { return stride() * (ny + 2 * ghosts); }
  /// Storage index of cell (j, k); j, k may reach into the ghost layers.
  int index(int j, int k) const { return (k + ghosts) * stride() + j + ghosts; }
};

enum class BoundaryKind { periodic, extrapolate };

struct BoundaryConditions {
  BoundaryKind x = BoundaryKind::periodic;
  BoundaryKind y = BoundaryKind::periodic;
};

BoundaryKind parse_boundary_kind(const std::string& s);
std::string to_string(BoundaryKind b);

struct AugField {
  Grid2D grid;
  std::vector<Vec8> U;
  std::vector<double> A;
  std::vector<double> B;

  AugField() = default;
  explicit AugField(const Grid2D& g);

  Vec8& u(int j, int k) { return U[grid.index(j, k)]; }
  const Vec8& u(int j, int k) const { return U[grid.index(j, k)]; }
  double& a(int j, int k) { return A[grid.index(j, k)]; }
  double a(int j, int k) const { return A[grid.index(j, k)]; }
  double& b(int j, int k) { return B[grid.index(j, k)]; }
  double b(int j, int k) const { return B[grid.index(j, k)]; }
};

/// Fills both ghost layers on every side; x first, then y over the full
/// width so the corners are consistent.
void fill_ghosts(AugField& f, const BoundaryConditions& bc);

/// out = a * x + b * y over all storage (ghosts included).
void combine(AugField& out, double a, const AugField& x, double b,
             const AugField& y);

/// Sum of rho * dx * dy over the interior.
double total_mass(const AugField& f);

}  // namespace lcdmhd
