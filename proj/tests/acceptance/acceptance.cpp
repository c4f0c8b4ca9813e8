// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any failed.
//
// usage: acceptance [cache_dir]
// Fine-mesh references are written to cache_dir and reused when their
// header matches.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "lcdmhd/convergence.hpp"
#include "lcdmhd/eigensystem.hpp"
#include "lcdmhd/io.hpp"
#include "lcdmhd/problems.hpp"
#include "lcdmhd/solver.hpp"
#include "oracles.hpp"

using namespace lcdmhd;
namespace fs = std::filesystem;

namespace {

// tolerances
constexpr double tol_lr = 1e-10;
constexpr double tol_residual = 1e-9;
constexpr double tol_jacobian = 1e-6;
constexpr double eigen_time_limit = 10.0;
constexpr int eigen_states = 10000;

constexpr double min_rate = 1.6;
constexpr double ref_u20 = 2.69e-2;
constexpr double ref_u40 = 7.83e-3;
constexpr double error_factor = 2.0;

constexpr double tol_div_linf = 1e-10;
constexpr double min_div_ratio = 1e4;

constexpr double bw_rho_max = 1.1;
constexpr double tol_y_invariance = 1e-12;
constexpr double tol_mass = 1e-12;
constexpr int head_cells = 3;
constexpr double head_threshold = 1e-3;
constexpr double bw_rho_right = 0.125;

constexpr double tol_uniform_rhs = 1e-13;
constexpr double tol_ab = 1e-13;

constexpr double ot_ratio = 1.02;

constexpr double min_order = 2.9;
constexpr double tol_taylor = 1e-14;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
  std::printf("%s  %-28s %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

SolverConfig config_for(const ProblemSpec& p, SchemeVariant v) {
  SolverConfig c;
  c.gamma = p.gamma;
  c.theta = p.theta;
  c.bc = p.bc;
  c.variant = v;
  return c;
}

double inf_norm(const Mat8& M) { return M.cwiseAbs().rowwise().sum().maxCoeff(); }

double max_b(const AugField& f) {
  double m = 0.0;
  for (int k = 0; k < f.grid.ny; ++k)
    for (int j = 0; j < f.grid.nx; ++j)
      for (int i : {cons_idx::b1, cons_idx::b2, cons_idx::b3})
        m = std::max(m, std::abs(f.u(j, k)[i]));
  return m;
}

// Runs (or loads) a reference solution cached as a field dump.
FieldDump cached_run(const fs::path& cache, const std::string& name, int nx,
                     int ny, SchemeVariant v, double t) {
  const fs::path file =
      cache / fmt("%s_%s_%dx%d_t%g.dump", name.c_str(), to_string(v).c_str(), nx, ny, t);
  if (fs::exists(file)) {
    try {
      FieldDump d = read_dump(file.string());
      if (d.nx == nx && d.ny == ny && d.time == t && d.problem == name &&
          d.variant == to_string(v))
        return d;
    } catch (const std::exception&) {
    }
  }
  std::printf("      computing %s reference %dx%d (cached in %s)\n", name.c_str(), nx,
              ny, cache.string().c_str());
  std::fflush(stdout);
  const ProblemSpec p = problem(name);
  Simulation sim(initialize(p, nx, ny), config_for(p, v));
  sim.advance_to(t);
  FieldDump d = make_dump(sim.field(), p.gamma, sim.time(), to_string(v), name);
  fs::create_directories(cache);
  write_dump(d, file.string());
  return d;
}

// ---------------------------------------------------------------------------

void eigensystem_suite() {
  const auto t0 = Clock::now();
  oracle::StateGenerator gen(2024);
  const GasModel gas(5.0 / 3.0);
  double worst_lr = 0.0, worst_res = 0.0, worst_jac = 0.0;
  for (int n = 0; n < eigen_states; ++n) {
    const Vec8 U = oracle::cons(gen.admissible(), gas.gamma());
    for (Direction d : {Direction::x, Direction::y}) {
      const EigenSystem es = eigensystem_cons(ConsState(U), gas, d);
      const Mat8 C = quasilinear_matrix_cons(ConsState(U), gas, d);
      worst_lr = std::max(worst_lr,
                          (es.left * es.right - Mat8::Identity()).cwiseAbs().maxCoeff());
      double res = 0.0;
      for (int i = 0; i < 8; ++i)
        res = std::max(res, (C * es.right.col(i) - es.lambdas[i] * es.right.col(i))
                                .cwiseAbs()
                                .maxCoeff());
      worst_res = std::max(worst_res, res / inf_norm(C));
      const Mat8 J = oracle::quasilinear_fd(U, gas.gamma(), d == Direction::x);
      worst_jac = std::max(worst_jac, (C - J).cwiseAbs().maxCoeff());
    }
  }
  const double secs = seconds_since(t0);
  report("eigensystem",
         worst_lr <= tol_lr && worst_res <= tol_residual && worst_jac <= tol_jacobian &&
             secs < eigen_time_limit,
         fmt("|LR-I|=%.2e res/|C|=%.2e |C-J_fd|=%.2e time=%.1fs", worst_lr, worst_res,
             worst_jac, secs));
}

void alfven_convergence() {
  ConvergenceOptions opt;
  opt.variant = SchemeVariant::lcd_pccu;
  opt.t_final = 5.0;
  const auto rows = convergence_study("alfven", {20, 40, 80}, opt);
  bool ok = true;
  std::string detail;
  for (const auto& r : rows) {
    detail += fmt("n=%d u=%.3e(%.2f) b3=%.3e(%.2f) ", r.mesh, r.error_u, r.rate_u,
                  r.error_b3, r.rate_b3);
    if (r.mesh != 20) ok = ok && r.rate_u >= min_rate && r.rate_b3 >= min_rate;
  }
  const auto within = [](double e, double ref) {
    return e <= error_factor * ref && e >= ref / error_factor;
  };
  ok = ok && within(rows[0].error_u, ref_u20) && within(rows[1].error_u, ref_u40);
  report("alfven_convergence", ok, detail);
}

void divergence_control() {
  struct Case {
    const char* name;
    int n;
  };
  bool ok = true;
  std::string detail;
  for (const Case c : {Case{"alfven", 80}, Case{"orszag_tang", 50}}) {
    const ProblemSpec p = problem(c.name);
    Simulation good(initialize(p, c.n, c.n), config_for(p, SchemeVariant::lcd_pccu));
    Simulation bad(initialize(p, c.n, c.n),
                   config_for(p, SchemeVariant::lcd_pccu_uncorrected));
    // track max|b| along the way so the bound is relative to the field seen
    double bmax = max_b(good.field()), worst = 0.0;
    const int chunks = 20;
    for (int i = 1; i <= chunks; ++i) {
      good.advance_to(p.t_final * i / chunks);
      bmax = std::max(bmax, max_b(good.field()));
    }
    const DivergenceNorms g = good.sample_now();
    for (const auto& s : good.diagnostics()) worst = std::max(worst, s.div_linf);
    bad.advance_to(p.t_final);
    const DivergenceNorms b = bad.sample_now();
    const double ratio = b.l1 / std::max(g.l1, 1e-300);
    ok = ok && worst <= tol_div_linf * bmax && ratio >= min_div_ratio;
    detail += fmt("%s %d^2: max_t Linf=%.2e (max|b|=%.2f) L1 %.2e vs %.2e; ", c.name, c.n,
                  worst, bmax, g.l1, b.l1);
  }
  report("divergence_control", ok, detail);
}

int head_position(const FieldDump& d) {
  for (int j = d.nx - 1; j >= 0; --j)
    if (std::abs(d.value(j, 0, 0) - bw_rho_right) > head_threshold) return j;
  return -1;
}

void brio_wu(const fs::path& cache) {
  const ProblemSpec p = problem("brio_wu");
  const auto t0 = Clock::now();
  Simulation sim(initialize(p, 200, 2), config_for(p, SchemeVariant::lcd_pccu));
  const double m0 = total_mass(sim.field());
  sim.advance_to(p.t_final);
  const double secs = seconds_since(t0);
  const FieldDump d = make_dump(sim.field(), p.gamma, sim.time(), "lcd-pccu", p.name);

  bool bounds = true;
  double ydiff = 0.0;
  for (int j = 0; j < 200; ++j) {
    for (int k = 0; k < 2; ++k) {
      for (int i = 0; i < dump_record_size; ++i)
        if (!std::isfinite(d.value(j, k, i))) bounds = false;
      const double rho = d.value(j, k, 0), pr = d.value(j, k, 4);
      if (!(rho > 0.0 && rho <= bw_rho_max && pr > 0.0)) bounds = false;
    }
    ydiff = std::max(ydiff, (sim.field().u(j, 1) - sim.field().u(j, 0)).cwiseAbs().maxCoeff());
  }
  const double dm = std::abs(total_mass(sim.field()) - m0) / m0;

  const FieldDump ref = cached_run(cache, "brio_wu", 2000, 2, SchemeVariant::pccu, p.t_final);
  const double dx = (p.xmax - p.xmin) / 200;
  const double head = p.xmin + (head_position(d) + 0.5) * dx;
  const double ref_head = p.xmin + (head_position(ref) + 0.5) * (p.xmax - p.xmin) / 2000;
  const double shift = std::abs(head - ref_head) / dx;

  report("brio_wu", bounds && ydiff <= tol_y_invariance && dm <= tol_mass &&
                        shift <= head_cells,
         fmt("bounds=%s y-diff=%.1e mass=%.1e head x=%.4f ref=%.4f (%.1f cells) time=%.1fs",
             bounds ? "ok" : "violated", ydiff, dm, head, ref_head, shift, secs));
}

void consistency() {
  // uniform states
  oracle::StateGenerator gen(77);
  double worst_rhs = 0.0;
  for (const std::string& name : problem_names()) {
    const ProblemSpec p = problem(name);
    for (SchemeVariant v : {SchemeVariant::lcd_pccu, SchemeVariant::pccu}) {
      for (int rep = 0; rep < 3; ++rep) {
        const Grid2D g(8, 8, p.xmin, p.xmax, p.ymin, p.ymax);
        AugField f(g), out(g);
        const Vec8 U = oracle::cons(gen.admissible(), p.gamma);
        for (auto& u : f.U) u = U;
        fill_ghosts(f, p.bc);
        Solver s(g, config_for(p, v));
        s.rhs(f, out);
        double m = 0.0;
        for (int k = 0; k < 8; ++k)
          for (int j = 0; j < 8; ++j) {
            m = std::max(m, out.u(j, k).cwiseAbs().maxCoeff() / std::max(1.0, U.cwiseAbs().maxCoeff()));
            m = std::max({m, std::abs(out.a(j, k)), std::abs(out.b(j, k))});
          }
        worst_rhs = std::max(worst_rhs, m);
      }
    }
  }

  // periodic mass and A + B on every benchmark
  double worst_mass = 0.0, worst_ab = 0.0;
  for (const std::string& name : problem_names()) {
    ProblemSpec p = problem(name);
    p.bc = {BoundaryKind::periodic, BoundaryKind::periodic};
    const int ny = name == "brio_wu" ? 2 : 24;
    const double dt_scale = name == "blast" ? 0.002 : name == "rotor" ? 0.02 : 0.1;
    Simulation sim(initialize(p, 24, ny), config_for(p, SchemeVariant::lcd_pccu));
    const double m0 = total_mass(sim.field());
    sim.advance_to(dt_scale);
    worst_mass = std::max(worst_mass, std::abs(total_mass(sim.field()) - m0) / m0);
    const AugField& f = sim.field();
    double ab = 0.0, scale = 1.0;
    for (int k = 0; k < ny; ++k)
      for (int j = 0; j < 24; ++j) {
        ab = std::max(ab, std::abs(f.a(j, k) + f.b(j, k)));
        scale = std::max(scale, std::abs(f.a(j, k)));
      }
    worst_ab = std::max(worst_ab, ab / scale);
  }
  report("consistency", worst_rhs <= tol_uniform_rhs && worst_mass <= tol_mass &&
                            worst_ab <= tol_ab,
         fmt("uniform rhs=%.1e periodic mass=%.1e |A+B|=%.1e", worst_rhs, worst_mass,
             worst_ab));
}

double l1_rho_distance(const AugField& f, const FieldDump& ref) {
  const int r = ref.nx / f.grid.nx;
  double sum = 0.0;
  for (int k = 0; k < f.grid.ny; ++k)
    for (int j = 0; j < f.grid.nx; ++j) {
      double avg = 0.0;
      for (int kk = 0; kk < r; ++kk)
        for (int jj = 0; jj < r; ++jj) avg += ref.value(j * r + jj, k * r + kk, 0);
      avg /= r * r;
      sum += std::abs(f.u(j, k)[cons_idx::rho] - avg);
    }
  return sum * f.grid.dx() * f.grid.dy();
}

void scheme_comparison(const fs::path& cache) {
  const ProblemSpec p = problem("orszag_tang");
  const FieldDump ref = cached_run(cache, p.name, 400, 400, SchemeVariant::pccu, p.t_final);
  double dist[2];
  int i = 0;
  for (SchemeVariant v : {SchemeVariant::lcd_pccu, SchemeVariant::pccu}) {
    Simulation sim(initialize(p, 100, 100), config_for(p, v));
    sim.advance_to(p.t_final);
    dist[i++] = l1_rho_distance(sim.field(), ref);
  }
  report("scheme_comparison", dist[0] <= ot_ratio * dist[1],
         fmt("L1(rho) to 400^2 reference: lcd-pccu=%.4e pccu=%.4e ratio=%.3f", dist[0],
             dist[1], dist[0] / dist[1]));
}

void stepper_order() {
  auto L = [](const double& x, double& o) { o = -x; };
  double prev = 0.0, order = 1e9;
  for (int k = 0; k < 4; ++k) {
    const int n = 10 << k;
    double u = 1.0;
    for (int s = 0; s < n; ++s) ssp_rk3_step(u, L, 1.0 / n);
    const double err = std::abs(u - std::exp(-1.0));
    if (k > 0) order = std::min(order, std::log2(prev / err));
    prev = err;
  }
  double taylor = 0.0;
  for (double lam : {-2.0, -0.5, 1.0})
    for (double dt : {0.01, 0.1, 0.3}) {
      double u = 1.0;
      ssp_rk3_step(u, [lam](const double& x, double& o) { o = lam * x; }, dt);
      const double z = lam * dt;
      taylor = std::max(taylor, std::abs(u - (1 + z + z * z / 2 + z * z * z / 6)));
    }
  report("stepper_order", order >= min_order && taylor <= tol_taylor,
         fmt("observed order=%.3f taylor=%.1e", order, taylor));
}

void blast_smoke() {
  const ProblemSpec p = problem("blast");
  Simulation sim(initialize(p, 100, 100), config_for(p, SchemeVariant::lcd_pccu));
  try {
    sim.advance_to(p.t_final);
  } catch (const AdmissibilityError& e) {
    // a located failure satisfies the contract
    const bool located = std::string(e.what()).find("at cell (") != std::string::npos;
    report("blast_smoke", located, fmt("stopped at t=%.4g: %s", sim.time(), e.what()));
    return;
  }
  double min_rho = 1e300, min_p = 1e300;
  const FieldDump d = make_dump(sim.field(), p.gamma, sim.time(), "lcd-pccu", p.name);
  for (int k = 0; k < 100; ++k)
    for (int j = 0; j < 100; ++j) {
      min_rho = std::min(min_rho, d.value(j, k, 0));
      min_p = std::min(min_p, d.value(j, k, 4));
    }
  report("blast_smoke", min_rho > 0.0 && min_p > 0.0,
         fmt("t=%.4g steps=%ld min rho=%.3e min p=%.3e", sim.time(), sim.steps(), min_rho,
             min_p));
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path cache = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_cache");
  const std::vector<std::pair<const char*, std::function<void()>>> criteria = {
      {"eigensystem", eigensystem_suite},
      {"alfven_convergence", alfven_convergence},
      {"divergence_control", divergence_control},
      {"brio_wu", [&] { brio_wu(cache); }},
      {"consistency", consistency},
      {"scheme_comparison", [&] { scheme_comparison(cache); }},
      {"stepper_order", stepper_order},
      {"blast_smoke", blast_smoke},
  };
  for (const auto& [name, run] : criteria) {
    try {
      run();
    } catch (const std::exception& e) {
      report(name, false, std::string("exception: ") + e.what());
    }
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
