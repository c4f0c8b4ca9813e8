#pragma once

// Three-stage SSP Runge-Kutta (Shu-Osher form) and the CFL time step.

#include <utility>

#include "lcdmhd/errors.hpp"

namespace lcdmhd {

struct TimeControls {
  double cfl = 0.25;
  double t_final = 0.0;
  double dt_min = 1e-12;

  /// Throws ConfigError unless 0 < cfl < 1, t_final >= 0, dt_min > 0.
  void validate() const;
};

/// dt = cfl * min(dx / a_x, dy / a_y), clipped to the remaining time.
/// Throws UnstableRunError when the unclipped step falls below dt_min.
double compute_dt(double dx, double dy, double a_x, double a_y,
                  const TimeControls& tc, double t_now);

inline void combine(double& out, double a, double x, double b, double y) {
  out = a * x + b * y;
}

/// One SSP-RK3 step of du/dt = L(u), in place on u.
///
/// State needs copy construction and a `combine(out, a, x, b, y)` overload
/// (out = a x + b y) found by lookup; L is called as L(const State&, State&).
/// If k1 is given it must hold L(u) already (saves one evaluation when the
/// first-stage derivative was needed to choose dt).
template <class State, class Rhs>
void ssp_rk3_step(State& u, Rhs&& L, double dt, const State* k1 = nullptr) {
  State k = u;
  if (k1)
    k = *k1;
  else
    L(u, k);
  State u1 = u;
  combine(u1, 1.0, u, dt, k);

  L(u1, k);
  State tmp = u1;
  combine(tmp, 1.0, u1, dt, k);
  State u2 = u;
  combine(u2, 0.75, u, 0.25, tmp);

  L(u2, k);
  combine(tmp, 1.0, u2, dt, k);
  combine(u, 1.0 / 3.0, u, 2.0 / 3.0, tmp);
}

}  // namespace lcdmhd
