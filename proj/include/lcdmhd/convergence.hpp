#pragma once

// Mesh-refinement study of the Alfven wave against its exact solution.

#include <functional>
#include <string>
#include <vector>

#include "lcdmhd/solver.hpp"

namespace lcdmhd {

/// log2(e_coarse / e_fine)
double convergence_rate(double e_coarse, double e_fine);

struct ConvergenceRow {
  int mesh = 0;
  double error_u = 0.0;
  double rate_u = 0.0;  ///< 0 on the first row
  double error_b3 = 0.0;
  double rate_b3 = 0.0;
};

/// sum |q_jk - q_exact(x_j, y_k, t)| dx dy for q = u and q = b3.
std::pair<double, double> alfven_l1_errors(const AugField& f, double gamma,
                                           double t);

struct ConvergenceOptions {
  SchemeVariant variant = SchemeVariant::lcd_pccu;
  double t_final = 5.0;
  double cfl = 0.25;
  double eps = default_eps;
  std::function<void(const ConvergenceRow&)> on_row;
};

/// Meshes must grow by factors of two (n x n each).
std::vector<ConvergenceRow> convergence_study(const std::string& problem_name,
                                              const std::vector<int>& meshes,
                                              const ConvergenceOptions& opt);

void write_convergence_csv(const std::vector<ConvergenceRow>& rows,
                           const std::string& path);

}  // namespace lcdmhd
