#include "lcdmhd/time_stepper.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace lcdmhd {

void TimeControls::validate() const {
  if (!(cfl > 0.0 && cfl < 1.0)) {
    std::ostringstream os;
    os << "cfl must lie in (0, 1), got " << cfl;
    throw ConfigError(os.str());
  }
  if (!(t_final >= 0.0)) throw ConfigError("t_final must be >= 0");
  if (!(dt_min > 0.0)) throw ConfigError("dt_min must be > 0");
}

double compute_dt(double dx, double dy, double a_x, double a_y,
                  const TimeControls& tc, double t_now) {
  const double inf = std::numeric_limits<double>::infinity();
  const double tx = a_x > 0.0 ? dx / a_x : inf;
  const double ty = a_y > 0.0 ? dy / a_y : inf;
  double dt = tc.cfl * std::min(tx, ty);
  if (!(dt >= tc.dt_min)) {
    std::ostringstream os;
    os << "time step " << dt << " fell below dt_min = " << tc.dt_min
       << " at t = " << t_now;
    throw UnstableRunError(os.str());
  }
  const double remaining = tc.t_final - t_now;
  if (dt > remaining) dt = remaining;
  return dt;
}

}  // namespace lcdmhd
