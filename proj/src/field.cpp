#include "lcdmhd/field.hpp"

#include <sstream>

namespace lcdmhd {

Grid2D::Grid2D(int nx_, int ny_, double xmin_, double xmax_, double ymin_,
               double ymax_)
    : nx(nx_), ny(ny_), xmin(xmin_), xmax(xmax_), ymin(ymin_), ymax(ymax_) {
  if (nx < 1 || ny < 1) {
    std::ostringstream os;
    os << "grid needs at least one cell per direction, got " << nx << "x" << ny;
    throw ConfigError(os.str());
  }
  if (!(xmax > xmin) || !(ymax > ymin))
    throw ConfigError("grid extents must satisfy min < max");
}

BoundaryKind parse_boundary_kind(const std::string& s) {
  if (s == "periodic") return BoundaryKind::periodic;
  if (s == "extrapolate") return BoundaryKind::extrapolate;
  throw ConfigError("unknown boundary kind '" + s +
                    "' (expected periodic or extrapolate)");
}

std::string to_string(BoundaryKind b) {
  return b == BoundaryKind::periodic ? "periodic" : "extrapolate";
}

AugField::AugField(const Grid2D& g)
    : grid(g),
      U(g.total(), Vec8::Zero()),
      A(g.total(), 0.0),
      B(g.total(), 0.0) {}

namespace {

void copy_cell(AugField& f, int dst, int src) {
  f.U[dst] = f.U[src];
  f.A[dst] = f.A[src];
  f.B[dst] = f.B[src];
}

}  // namespace

void fill_ghosts(AugField& f, const BoundaryConditions& bc) {
  const Grid2D& g = f.grid;
  const int G = Grid2D::ghosts;
  for (int k = 0; k < g.ny; ++k) {
    for (int l = 1; l <= G; ++l) {
      const bool per = bc.x == BoundaryKind::periodic;
      copy_cell(f, g.index(-l, k), g.index(per ? g.nx - l : 0, k));
      copy_cell(f, g.index(g.nx - 1 + l, k),
                g.index(per ? l - 1 : g.nx - 1, k));
    }
  }
  for (int j = -G; j < g.nx + G; ++j) {
    for (int l = 1; l <= G; ++l) {
      const bool per = bc.y == BoundaryKind::periodic;
      copy_cell(f, g.index(j, -l), g.index(j, per ? g.ny - l : 0));
      copy_cell(f, g.index(j, g.ny - 1 + l),
                g.index(j, per ? l - 1 : g.ny - 1));
    }
  }
}

void combine(AugField& out, double a, const AugField& x, double b,
             const AugField& y) {
  const std::size_t n = x.U.size();
  if (out.U.size() != n) out = AugField(x.grid);
  out.grid = x.grid;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    out.U[i] = a * x.U[i] + b * y.U[i];
    out.A[i] = a * x.A[i] + b * y.A[i];
    out.B[i] = a * x.B[i] + b * y.B[i];
  }
}

double total_mass(const AugField& f) {
  const Grid2D& g = f.grid;
  double m = 0.0;
  for (int k = 0; k < g.ny; ++k)
    for (int j = 0; j < g.nx; ++j) m += f.u(j, k)[cons_idx::rho];
  return m * g.dx() * g.dy();
}

}  // namespace lcdmhd
