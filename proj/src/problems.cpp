#include "lcdmhd/problems.hpp"

#include <cmath>
#include <numbers>

namespace lcdmhd {

namespace {

constexpr double pi = std::numbers::pi;

ProblemSpec brio_wu() {
  ProblemSpec p;
  p.name = "brio_wu";
  p.xmin = -1.0;
  p.xmax = 1.0;
  p.ymin = -0.01;
  p.ymax = 0.01;
  p.gamma = 2.0;
  p.bc = {BoundaryKind::extrapolate, BoundaryKind::extrapolate};
  p.t_final = 0.2;
  p.default_nx = 200;
  p.default_ny = 2;
  p.initial = [](double x, double) {
    if (x < 0.0) return PrimState(1.0, 0, 0, 0, 1.0, 0.75, 1.0, 0);
    return PrimState(0.125, 0, 0, 0, 0.1, 0.75, -1.0, 0);
  };
  p.initial_aux = [](double, double) { return AugPair{}; };
  return p;
}

ProblemSpec alfven() {
  ProblemSpec p;
  p.name = "alfven";
  const double ca = std::cos(alfven_angle), sa = std::sin(alfven_angle);
  p.xmax = 1.0 / ca;
  p.ymax = 1.0 / sa;
  p.gamma = 5.0 / 3.0;
  p.t_final = 5.0;
  p.default_nx = p.default_ny = 80;
  p.initial = [](double x, double y) { return alfven_exact(x, y, 0.0); };
  p.initial_aux = [ca, sa](double x, double y) {
    // b1 = cos a + 0.1 sin(phi) sin a, b2 = sin a - 0.1 sin(phi) cos a
    const double d = 0.2 * pi * std::cos(2.0 * pi * (x * ca + y * sa)) * sa * ca;
    return AugPair{d, -d};
  };
  return p;
}

ProblemSpec orszag_tang() {
  ProblemSpec p;
  p.name = "orszag_tang";
  p.xmax = p.ymax = 2.0 * pi;
  p.gamma = 5.0 / 3.0;
  p.t_final = 4.0;
  p.default_nx = p.default_ny = 200;
  const double g = p.gamma;
  p.initial = [g](double x, double y) {
    return PrimState(g * g, -std::sin(y), std::sin(x), 0.0, g, -std::sin(y),
                     std::sin(2.0 * x), 0.0);
  };
  // b1 depends on y only and b2 on x only
  p.initial_aux = [](double, double) { return AugPair{}; };
  return p;
}

ProblemSpec rotor() {
  ProblemSpec p;
  p.name = "rotor";
  p.gamma = 5.0 / 3.0;
  p.t_final = 0.295;
  p.default_nx = p.default_ny = 200;
  p.initial = [](double x, double y) {
    const double r0 = 0.1;
    const double r = std::hypot(x - 0.5, y - 0.5);
    const double b1 = 2.5 / std::sqrt(4.0 * pi);
    double rho = 1.0, u = 0.0, v = 0.0;
    if (r < r0) {
      rho = 10.0;
      u = (0.5 - y) / r0;
      v = (x - 0.5) / r0;
    } else if (r <= 0.115) {
      const double mu = (0.115 - r) / 0.015;
      rho = 1.0 + 9.0 * mu;
      u = mu * (0.5 - y) / r;
      v = mu * (x - 0.5) / r;
    }
    return PrimState(rho, u, v, 0.0, 0.5, b1, 0.0, 0.0);
  };
  p.initial_aux = [](double, double) { return AugPair{}; };
  return p;
}

ProblemSpec blast() {
  ProblemSpec p;
  p.name = "blast";
  p.xmin = p.ymin = -0.5;
  p.xmax = p.ymax = 0.5;
  p.gamma = 1.4;
  p.theta = 1.0;
  p.bc = {BoundaryKind::extrapolate, BoundaryKind::extrapolate};
  p.t_final = 0.01;
  p.default_nx = p.default_ny = 200;
  p.initial = [](double x, double y) {
    const double pr = std::hypot(x, y) < 0.1 ? 1000.0 : 0.1;
    return PrimState(1.0, 0, 0, 0, pr, 50.0 / std::sqrt(pi), 0, 0);
  };
  p.initial_aux = [](double, double) { return AugPair{}; };
  return p;
}

}  // namespace

std::vector<std::string> problem_names() {
  return {"brio_wu", "alfven", "orszag_tang", "rotor", "blast"};
}

ProblemSpec problem(const std::string& name) {
  if (name == "brio_wu" || name == "brio-wu") return brio_wu();
  if (name == "alfven") return alfven();
  if (name == "orszag_tang" || name == "orszag-tang") return orszag_tang();
  if (name == "rotor") return rotor();
  if (name == "blast") return blast();
  std::string valid;
  for (const auto& n : problem_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw ConfigError("unknown problem '" + name + "' (valid: " + valid + ")");
}

AugField initialize(const ProblemSpec& p, int nx, int ny) {
  const Grid2D g(nx, ny, p.xmin, p.xmax, p.ymin, p.ymax);
  const GasModel gas(p.gamma);
  AugField f(g);
  for (int k = 0; k < ny; ++k) {
    for (int j = 0; j < nx; ++j) {
      const double x = g.x(j), y = g.y(k);
      f.u(j, k) = prim_to_cons(p.initial(x, y), gas).v;
      const AugPair ab = p.initial_aux(x, y);
      f.a(j, k) = ab.a;
      f.b(j, k) = ab.b;
    }
  }
  return f;
}

PrimState alfven_exact(double x, double y, double t) {
  // the wave moves against its propagation direction at unit Alfven speed,
  // so the phase is shifted by +t
  const double ca = std::cos(alfven_angle), sa = std::sin(alfven_angle);
  const double phi = 2.0 * pi * (x * ca + y * sa + t);
  const double perp = 0.1 * std::sin(phi);
  const double par_b = 1.0;
  const double w = 0.1 * std::cos(phi);
  return PrimState(1.0, perp * sa, -perp * ca, w, 0.1,
                   par_b * ca + perp * sa, par_b * sa - perp * ca, w);
}

}  // namespace lcdmhd
