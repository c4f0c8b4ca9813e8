#pragma once

// Conservative/primitive MHD states, the ideal-gas EOS, and the physical
// fluxes of the Godunov-Powell system augmented with A = (b1)_x, B = (b2)_y.

#include <Eigen/Core>

#include "lcdmhd/errors.hpp"

namespace lcdmhd {

using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat8 = Eigen::Matrix<double, 8, 8>;
using Vec2 = Eigen::Matrix<double, 2, 1>;

enum class Direction { x, y };

/// Slots of the conservative vector (rho, rho u, rho v, rho w, b1, b2, b3, E).
namespace cons_idx {
inline constexpr int rho = 0, mx = 1, my = 2, mz = 3, b1 = 4, b2 = 5, b3 = 6,
                     en = 7;
}

/// Slots of the primitive vector (rho, u, v, w, p, b1, b2, b3).
namespace prim_idx {
inline constexpr int rho = 0, u = 1, v = 2, w = 3, p = 4, b1 = 5, b2 = 6,
                     b3 = 7;
}

struct ConsState {
  Vec8 v = Vec8::Zero();

  ConsState() = default;
  explicit ConsState(const Vec8& x) : v(x) {}
  ConsState(double rho, double mx, double my, double mz, double b1, double b2,
            double b3, double en) {
    v << rho, mx, my, mz, b1, b2, b3, en;
  }

  double rho() const { return v[cons_idx::rho]; }
  double mx() const { return v[cons_idx::mx]; }
  double my() const { return v[cons_idx::my]; }
  double mz() const { return v[cons_idx::mz]; }
  double b1() const { return v[cons_idx::b1]; }
  double b2() const { return v[cons_idx::b2]; }
  double b3() const { return v[cons_idx::b3]; }
  double en() const { return v[cons_idx::en]; }
};

struct PrimState {
  Vec8 v = Vec8::Zero();

  PrimState() = default;
  explicit PrimState(const Vec8& x) : v(x) {}
  PrimState(double rho, double u, double vel_y, double w, double p, double b1,
            double b2, double b3) {
    v << rho, u, vel_y, w, p, b1, b2, b3;
  }

  double rho() const { return v[prim_idx::rho]; }
  double u() const { return v[prim_idx::u]; }
  double vy() const { return v[prim_idx::v]; }
  double w() const { return v[prim_idx::w]; }
  double p() const { return v[prim_idx::p]; }
  double b1() const { return v[prim_idx::b1]; }
  double b2() const { return v[prim_idx::b2]; }
  double b3() const { return v[prim_idx::b3]; }
};

/// Ideal-gas closure. gamma must exceed 1.
class GasModel {
 public:
  explicit GasModel(double gamma);

  double gamma() const noexcept { return gamma_; }
  /// gamma_n := n - gamma
  double gamma_n(int n) const noexcept { return n - gamma_; }

 private:
  double gamma_;
};

/// Values of the auxiliary variables A = (b1)_x and B = (b2)_y.
struct AugPair {
  double a = 0.0;
  double b = 0.0;
};

enum class Admissibility { ok, nonpositive_density, nonpositive_pressure, non_finite };

Admissibility admissibility(const PrimState& V);
/// Throws AdmissibilityError unless admissibility(V) == ok.
void require_admissible(const PrimState& V);

/// Throws on rho <= 0; returns p as given by the EOS even when it is
/// non-positive, so callers decide how to treat it.
PrimState cons_to_prim(const ConsState& U, const GasModel& gas);
ConsState prim_to_cons(const PrimState& V, const GasModel& gas);

Vec8 flux_x(const ConsState& U, const GasModel& gas);
Vec8 flux_y(const ConsState& U, const GasModel& gas);
Vec8 flux(const ConsState& U, const GasModel& gas, Direction dir);

/// q = -(0, b1, b2, b3, u, v, w, u.b); Q^x = q e_b1^T, Q^y = q e_b2^T.
Vec8 godunov_powell_q(const ConsState& U);

/// (uA - b2 u_y, uB + b2 u_y)
Vec2 aux_flux_x(const PrimState& V, const AugPair& ab, double uy);
/// (vA + b1 v_x, vB - b1 v_x)
Vec2 aux_flux_y(const PrimState& V, const AugPair& ab, double vx);

/// Swaps the x/y roles of a state: (u,v) and (b1,b2) in primitive order,
/// (mx,my) and (b1,b2) in conservative order. It is an involution.
Vec8 swap_xy_cons(const Vec8& U);
Vec8 swap_xy_prim(const Vec8& V);

}  // namespace lcdmhd
