#pragma once

// Initial/boundary data of the five benchmark problems.

#include <functional>
#include <string>
#include <vector>

#include "lcdmhd/field.hpp"

namespace lcdmhd {

struct ProblemSpec {
  std::string name;
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  double gamma = 5.0 / 3.0;
  double theta = 1.3;
  BoundaryConditions bc;
  double t_final = 0.0;
  int default_nx = 100, default_ny = 100;
  std::function<PrimState(double x, double y)> initial;
  /// Analytic A = (b1)_x, B = (b2)_y of the initial field.
  std::function<AugPair(double x, double y)> initial_aux;
};

/// brio_wu | alfven | orszag_tang | rotor | blast. Throws ConfigError
/// listing the valid names otherwise.
ProblemSpec problem(const std::string& name);
std::vector<std::string> problem_names();

/// Cell averages approximated by midpoint values; ghosts are left zero.
AugField initialize(const ProblemSpec& p, int nx, int ny);

/// Travelling-wave exact solution of the circularly polarized Alfven wave.
PrimState alfven_exact(double x, double y, double t);

inline constexpr double alfven_angle = 3.14159265358979323846 / 6.0;

}  // namespace lcdmhd
