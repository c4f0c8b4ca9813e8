#include "lcdmhd/lcdmhd.h"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lcdmhd/convergence.hpp"
#include "lcdmhd/io.hpp"
#include "lcdmhd/problems.hpp"
#include "lcdmhd/solver.hpp"

struct lcdmhd_sim {
  lcdmhd::ProblemSpec spec;
  lcdmhd::SolverConfig cfg;
  std::unique_ptr<lcdmhd::Simulation> sim;
};

namespace {

thread_local std::string last_error;

lcdmhd_status fail(lcdmhd_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
lcdmhd_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return LCDMHD_OK;
  } catch (const lcdmhd::ConfigError& e) {
    return fail(LCDMHD_ERR_CONFIG, e.what());
  } catch (const lcdmhd::AdmissibilityError& e) {
    return fail(LCDMHD_ERR_ADMISSIBILITY, e.what());
  } catch (const lcdmhd::UnstableRunError& e) {
    return fail(LCDMHD_ERR_UNSTABLE, e.what());
  } catch (const lcdmhd::IoError& e) {
    return fail(LCDMHD_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(LCDMHD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LCDMHD_ERR_INTERNAL, "unknown error");
  }
}

lcdmhd_status null_arg(const char* what) {
  return fail(LCDMHD_ERR_INVALID_ARGUMENT, std::string(what) + " is NULL");
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

extern "C" {

void lcdmhd_run_config_init(lcdmhd_run_config* cfg) {
  if (!cfg) return;
  *cfg = lcdmhd_run_config{};
  cfg->problem = "orszag_tang";
  cfg->scheme = "lcd-pccu";
  cfg->cfl = 0.25;
  cfg->eps = lcdmhd::default_eps;
}

const char* lcdmhd_last_error(void) { return last_error.c_str(); }

const char* lcdmhd_status_name(lcdmhd_status s) {
  switch (s) {
    case LCDMHD_OK: return "ok";
    case LCDMHD_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LCDMHD_ERR_CONFIG: return "configuration error";
    case LCDMHD_ERR_ADMISSIBILITY: return "inadmissible state";
    case LCDMHD_ERR_UNSTABLE: return "unstable run";
    case LCDMHD_ERR_IO: return "i/o error";
    case LCDMHD_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

int lcdmhd_set_num_threads(int n) {
#ifdef _OPENMP
  if (n <= 0) {
    if (const char* env = std::getenv("LCDMHD_NUM_THREADS")) {
      const int v = std::atoi(env);
      if (v > 0) n = v;
    }
  }
  if (n > 0) omp_set_num_threads(n);
  return omp_get_max_threads();
#else
  (void)n;
  return 1;
#endif
}

int lcdmhd_problem_count(void) {
  return static_cast<int>(lcdmhd::problem_names().size());
}

const char* lcdmhd_problem_name(int i) {
  static const std::vector<std::string> names = lcdmhd::problem_names();
  if (i < 0 || i >= static_cast<int>(names.size())) return nullptr;
  return names[static_cast<std::size_t>(i)].c_str();
}

lcdmhd_status lcdmhd_problem_t_final(const char* problem, double* t_final) {
  if (!problem) return null_arg("problem");
  if (!t_final) return null_arg("t_final");
  return guarded([&] { *t_final = lcdmhd::problem(problem).t_final; });
}

lcdmhd_status lcdmhd_sim_create(const lcdmhd_run_config* c, lcdmhd_sim** out) {
  if (!c) return null_arg("config");
  if (!out) return null_arg("out");
  *out = nullptr;
  if (!c->problem) return null_arg("config.problem");
  if (c->nx < 0 || c->ny < 0)
    return fail(LCDMHD_ERR_CONFIG, "nx and ny must be positive");
  return guarded([&] {
    auto s = std::make_unique<lcdmhd_sim>();
    s->spec = lcdmhd::problem(c->problem);
    s->cfg.gamma = s->spec.gamma;
    s->cfg.theta = c->theta > 0.0 ? c->theta : s->spec.theta;
    s->cfg.eps = c->eps > 0.0 ? c->eps : lcdmhd::default_eps;
    s->cfg.variant = lcdmhd::parse_scheme_variant(c->scheme ? c->scheme
                                                            : "lcd-pccu");
    s->cfg.bc = s->spec.bc;
    s->cfg.floor = c->floor != 0;
    s->cfg.validate();
    const int nx = c->nx > 0 ? c->nx : s->spec.default_nx;
    const int ny = c->ny > 0 ? c->ny : s->spec.default_ny;
    const double cfl = c->cfl > 0.0 ? c->cfl : 0.25;
    s->sim = std::make_unique<lcdmhd::Simulation>(
        lcdmhd::initialize(s->spec, nx, ny), s->cfg, cfl);
    *out = s.release();
  });
}

void lcdmhd_sim_destroy(lcdmhd_sim* sim) { delete sim; }

lcdmhd_status lcdmhd_sim_advance_to(lcdmhd_sim* sim, double t) {
  if (!sim) return null_arg("sim");
  return guarded([&] { sim->sim->advance_to(t); });
}

lcdmhd_status lcdmhd_sim_time(const lcdmhd_sim* sim, double* t) {
  if (!sim) return null_arg("sim");
  if (!t) return null_arg("t");
  *t = sim->sim->time();
  return LCDMHD_OK;
}

lcdmhd_status lcdmhd_sim_steps(const lcdmhd_sim* sim, long* steps) {
  if (!sim) return null_arg("sim");
  if (!steps) return null_arg("steps");
  *steps = sim->sim->steps();
  return LCDMHD_OK;
}

lcdmhd_status lcdmhd_sim_dims(const lcdmhd_sim* sim, int* nx, int* ny) {
  if (!sim) return null_arg("sim");
  if (nx) *nx = sim->sim->field().grid.nx;
  if (ny) *ny = sim->sim->field().grid.ny;
  return LCDMHD_OK;
}

lcdmhd_status lcdmhd_sim_mass(const lcdmhd_sim* sim, double* mass) {
  if (!sim) return null_arg("sim");
  if (!mass) return null_arg("mass");
  *mass = lcdmhd::total_mass(sim->sim->field());
  return LCDMHD_OK;
}

lcdmhd_status lcdmhd_sim_get_field(const lcdmhd_sim* sim, const char* var,
                                   double* out, size_t n) {
  if (!sim) return null_arg("sim");
  if (!var) return null_arg("var");
  if (!out) return null_arg("out");
  const auto& names = lcdmhd::dump_variables();
  const auto it = std::find(names.begin(), names.end(), var);
  if (it == names.end())
    return fail(LCDMHD_ERR_INVALID_ARGUMENT,
                std::string("unknown variable '") + var + "'");
  const int vi = static_cast<int>(it - names.begin());
  const auto& g = sim->sim->field().grid;
  const std::size_t need = static_cast<std::size_t>(g.nx) * g.ny;
  if (n < need)
    return fail(LCDMHD_ERR_INVALID_ARGUMENT, "output buffer too small");
  return guarded([&] {
    const lcdmhd::FieldDump d =
        lcdmhd::make_dump(sim->sim->field(), sim->cfg.gamma, sim->sim->time(),
                          lcdmhd::to_string(sim->cfg.variant), sim->spec.name);
    for (int k = 0; k < g.ny; ++k)
      for (int j = 0; j < g.nx; ++j)
        out[static_cast<std::size_t>(k) * g.nx + j] = d.value(j, k, vi);
  });
}

lcdmhd_status lcdmhd_sim_divergence_norms(lcdmhd_sim* sim, double* l1,
                                          double* linf) {
  if (!sim) return null_arg("sim");
  return guarded([&] {
    const lcdmhd::DivergenceNorms n = sim->sim->sample_now();
    if (l1) *l1 = n.l1;
    if (linf) *linf = n.linf;
  });
}

lcdmhd_status lcdmhd_sim_write_dump(const lcdmhd_sim* sim, const char* path) {
  if (!sim) return null_arg("sim");
  if (!path) return null_arg("path");
  return guarded([&] {
    lcdmhd::write_dump(
        lcdmhd::make_dump(sim->sim->field(), sim->cfg.gamma, sim->sim->time(),
                          lcdmhd::to_string(sim->cfg.variant), sim->spec.name),
        path);
  });
}

lcdmhd_status lcdmhd_sim_write_diagnostics_csv(const lcdmhd_sim* sim,
                                               const char* path) {
  if (!sim) return null_arg("sim");
  if (!path) return null_arg("path");
  return guarded(
      [&] { lcdmhd::write_diagnostics_csv(sim->sim->diagnostics(), path); });
}

lcdmhd_status lcdmhd_convergence(const char* problem, const char* scheme,
                                 const int* meshes, int n_meshes,
                                 double t_final, double cfl,
                                 lcdmhd_convergence_row* rows,
                                 const char* out_csv) {
  if (!problem) return null_arg("problem");
  if (!meshes) return null_arg("meshes");
  if (n_meshes < 1) return fail(LCDMHD_ERR_CONFIG, "no meshes given");
  return guarded([&] {
    lcdmhd::ConvergenceOptions opt;
    opt.variant = lcdmhd::parse_scheme_variant(scheme ? scheme : "lcd-pccu");
    if (t_final > 0.0) opt.t_final = t_final;
    if (cfl > 0.0) opt.cfl = cfl;
    const std::vector<int> m(meshes, meshes + n_meshes);
    const auto res = lcdmhd::convergence_study(problem, m, opt);
    if (rows) {
      for (std::size_t i = 0; i < res.size(); ++i)
        rows[i] = {res[i].mesh, res[i].error_u, res[i].rate_u,
                   res[i].error_b3, res[i].rate_b3};
    }
    if (out_csv) lcdmhd::write_convergence_csv(res, out_csv);
  });
}

lcdmhd_status lcdmhd_slice(const char* dump_path, char axis, double at,
                           const char* vars, const char* out_csv) {
  if (!dump_path) return null_arg("dump_path");
  if (!vars) return null_arg("vars");
  if (!out_csv) return null_arg("out_csv");
  return guarded([&] {
    const auto names = split_csv(vars);
    if (names.empty()) throw lcdmhd::ConfigError("no slice variables given");
    lcdmhd::write_slice_csv(lcdmhd::read_dump(dump_path), axis, at, names,
                            out_csv);
  });
}

}  // extern "C"
