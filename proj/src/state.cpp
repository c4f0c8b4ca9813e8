#include "lcdmhd/state.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace lcdmhd {

namespace {

std::string describe(const std::string& quantity, double value,
                     const std::optional<AdmissibilityError::Cell>& cell) {
  std::ostringstream os;
  os << "inadmissible state: " << quantity << " = " << value;
  if (cell) os << " at cell (" << cell->j << ", " << cell->k << ")";
  return os.str();
}

}  // namespace

AdmissibilityError::AdmissibilityError(std::string quantity, double value,
                                       std::optional<Cell> cell)
    : Error(describe(quantity, value, cell)),
      quantity_(std::move(quantity)),
      value_(value),
      cell_(cell) {}

AdmissibilityError AdmissibilityError::at(int j, int k) const {
  return AdmissibilityError(quantity_, value_, Cell{j, k});
}

GasModel::GasModel(double gamma) : gamma_(gamma) {
  if (!(gamma > 1.0)) {
    std::ostringstream os;
    os << "gamma must be > 1, got " << gamma;
    throw ConfigError(os.str());
  }
}

Admissibility admissibility(const PrimState& V) {
  if (!V.v.allFinite()) return Admissibility::non_finite;
  if (!(V.rho() > 0.0)) return Admissibility::nonpositive_density;
  if (!(V.p() > 0.0)) return Admissibility::nonpositive_pressure;
  return Admissibility::ok;
}

void require_admissible(const PrimState& V) {
  switch (admissibility(V)) {
    case Admissibility::ok:
      return;
    case Admissibility::non_finite:
      throw AdmissibilityError("non-finite component", std::nan(""));
    case Admissibility::nonpositive_density:
      throw AdmissibilityError("density", V.rho());
    case Admissibility::nonpositive_pressure:
      throw AdmissibilityError("pressure", V.p());
  }
}

PrimState cons_to_prim(const ConsState& U, const GasModel& gas) {
  const double rho = U.rho();
  if (!(rho > 0.0)) throw AdmissibilityError("density", rho);
  const double u = U.mx() / rho;
  const double v = U.my() / rho;
  const double w = U.mz() / rho;
  const double kinetic = 0.5 * rho * (u * u + v * v + w * w);
  const double magnetic =
      0.5 * (U.b1() * U.b1() + U.b2() * U.b2() + U.b3() * U.b3());
  const double p = (gas.gamma() - 1.0) * (U.en() - kinetic - magnetic);
  return PrimState(rho, u, v, w, p, U.b1(), U.b2(), U.b3());
}

ConsState prim_to_cons(const PrimState& V, const GasModel& gas) {
  const double rho = V.rho();
  if (!(rho > 0.0)) throw AdmissibilityError("density", rho);
  const double u = V.u(), v = V.vy(), w = V.w();
  const double en = V.p() / (gas.gamma() - 1.0) +
                    0.5 * rho * (u * u + v * v + w * w) +
                    0.5 * (V.b1() * V.b1() + V.b2() * V.b2() + V.b3() * V.b3());
  return ConsState(rho, rho * u, rho * v, rho * w, V.b1(), V.b2(), V.b3(), en);
}

Vec8 flux_x(const ConsState& U, const GasModel& gas) {
  const PrimState V = cons_to_prim(U, gas);
  const double rho = V.rho(), u = V.u(), v = V.vy(), w = V.w(), p = V.p();
  const double b1 = V.b1(), b2 = V.b2(), b3 = V.b3();
  const double pm = 0.5 * (b1 * b1 + b2 * b2 + b3 * b3);
  const double ub = u * b1 + v * b2 + w * b3;
  Vec8 F;
  F << rho * u, rho * u * u + p + pm - b1 * b1, rho * u * v - b1 * b2,
      rho * u * w - b1 * b3, 0.0, u * b2 - v * b1, u * b3 - w * b1,
      (U.en() + p + pm) * u - ub * b1;
  return F;
}

Vec8 flux_y(const ConsState& U, const GasModel& gas) {
  const PrimState V = cons_to_prim(U, gas);
  const double rho = V.rho(), u = V.u(), v = V.vy(), w = V.w(), p = V.p();
  const double b1 = V.b1(), b2 = V.b2(), b3 = V.b3();
  const double pm = 0.5 * (b1 * b1 + b2 * b2 + b3 * b3);
  const double ub = u * b1 + v * b2 + w * b3;
  Vec8 G;
  G << rho * v, rho * u * v - b1 * b2, rho * v * v + p + pm - b2 * b2,
      rho * v * w - b2 * b3, v * b1 - u * b2, 0.0, v * b3 - w * b2,
      (U.en() + p + pm) * v - ub * b2;
  return G;
}

Vec8 flux(const ConsState& U, const GasModel& gas, Direction dir) {
  return dir == Direction::x ? flux_x(U, gas) : flux_y(U, gas);
}

Vec8 godunov_powell_q(const ConsState& U) {
  const double rho = U.rho();
  const double u = U.mx() / rho, v = U.my() / rho, w = U.mz() / rho;
  Vec8 q;
  q << 0.0, -U.b1(), -U.b2(), -U.b3(), -u, -v, -w,
      -(u * U.b1() + v * U.b2() + w * U.b3());
  return q;
}

Vec2 aux_flux_x(const PrimState& V, const AugPair& ab, double uy) {
  return {V.u() * ab.a - V.b2() * uy, V.u() * ab.b + V.b2() * uy};
}

Vec2 aux_flux_y(const PrimState& V, const AugPair& ab, double vx) {
  return {V.vy() * ab.a + V.b1() * vx, V.vy() * ab.b - V.b1() * vx};
}

Vec8 swap_xy_cons(const Vec8& U) {
  Vec8 r = U;
  std::swap(r[cons_idx::mx], r[cons_idx::my]);
  std::swap(r[cons_idx::b1], r[cons_idx::b2]);
  return r;
}

Vec8 swap_xy_prim(const Vec8& V) {
  Vec8 r = V;
  std::swap(r[prim_idx::u], r[prim_idx::v]);
  std::swap(r[prim_idx::b1], r[prim_idx::b2]);
  return r;
}

}  // namespace lcdmhd
