#include "lcdmhd/convergence.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>

#include "lcdmhd/problems.hpp"

namespace lcdmhd {

double convergence_rate(double e_coarse, double e_fine) {
  return std::log2(e_coarse / e_fine);
}

std::pair<double, double> alfven_l1_errors(const AugField& f, double gamma,
                                           double t) {
  const Grid2D& g = f.grid;
  const GasModel gas(gamma);
  double eu = 0.0, eb = 0.0;
  for (int k = 0; k < g.ny; ++k) {
    for (int j = 0; j < g.nx; ++j) {
      const PrimState V = cons_to_prim(ConsState(f.u(j, k)), gas);
      const PrimState X = alfven_exact(g.x(j), g.y(k), t);
      eu += std::abs(V.u() - X.u());
      eb += std::abs(V.b3() - X.b3());
    }
  }
  return {eu * g.dx() * g.dy(), eb * g.dx() * g.dy()};
}

std::vector<ConvergenceRow> convergence_study(const std::string& problem_name,
                                              const std::vector<int>& meshes,
                                              const ConvergenceOptions& opt) {
  if (problem_name != "alfven")
    throw ConfigError("convergence study needs an exact solution; only "
                      "'alfven' is supported");
  if (meshes.empty()) throw ConfigError("convergence study needs meshes");
  for (std::size_t i = 1; i < meshes.size(); ++i)
    if (meshes[i] != 2 * meshes[i - 1])
      throw ConfigError("meshes must be nested by a factor of 2");
  const ProblemSpec p = problem(problem_name);
  std::vector<ConvergenceRow> rows;
  for (int n : meshes) {
    SolverConfig cfg;
    cfg.gamma = p.gamma;
    cfg.theta = p.theta;
    cfg.eps = opt.eps;
    cfg.variant = opt.variant;
    cfg.bc = p.bc;
    Simulation sim(initialize(p, n, n), cfg, opt.cfl);
    sim.advance_to(opt.t_final);
    const auto [eu, eb] = alfven_l1_errors(sim.field(), p.gamma, sim.time());
    ConvergenceRow r;
    r.mesh = n;
    r.error_u = eu;
    r.error_b3 = eb;
    if (!rows.empty()) {
      r.rate_u = convergence_rate(rows.back().error_u, eu);
      r.rate_b3 = convergence_rate(rows.back().error_b3, eb);
    }
    rows.push_back(r);
    if (opt.on_row) opt.on_row(r);
  }
  return rows;
}

void write_convergence_csv(const std::vector<ConvergenceRow>& rows,
                           const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os << std::setprecision(10);
  os << "mesh,error_u,rate_u,error_b3,rate_b3\n";
  for (const auto& r : rows)
    os << r.mesh << ',' << r.error_u << ',' << r.rate_u << ',' << r.error_b3
       << ',' << r.rate_b3 << '\n';
  if (!os) throw IoError("write to '" + path + "' failed");
}

}  // namespace lcdmhd
