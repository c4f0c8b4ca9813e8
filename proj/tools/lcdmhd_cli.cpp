// Benchmark driver. Talks to the solver only through the C interface.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcdmhd/lcdmhd.h"

namespace fs = std::filesystem;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_runtime = 3;

int exit_code(lcdmhd_status s) {
  switch (s) {
    case LCDMHD_OK: return exit_ok;
    case LCDMHD_ERR_INVALID_ARGUMENT:
    case LCDMHD_ERR_CONFIG: return exit_config;
    default: return exit_runtime;
  }
}

int report(lcdmhd_status s) {
  std::cerr << "error: " << lcdmhd_last_error() << '\n';
  return exit_code(s);
}

std::string time_tag(double t) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << t;
  return os.str();
}

struct RunArgs {
  std::string problem;
  std::string scheme = "lcd-pccu";
  int nx = 0, ny = 0;
  double theta = 0.0;
  double cfl = 0.25;
  double eps = 1e-8;
  double t_final = -1.0;
  bool floor = false;
  std::string out;
  std::vector<double> snapshots;
};

struct Sim {
  lcdmhd_sim* p = nullptr;
  ~Sim() { lcdmhd_sim_destroy(p); }
};

int run(const RunArgs& a) {
  lcdmhd_run_config cfg;
  lcdmhd_run_config_init(&cfg);
  cfg.problem = a.problem.c_str();
  cfg.scheme = a.scheme.c_str();
  cfg.nx = a.nx;
  cfg.ny = a.ny;
  cfg.theta = a.theta;
  cfg.cfl = a.cfl;
  cfg.eps = a.eps;
  cfg.floor = a.floor ? 1 : 0;

  double t_final = a.t_final;
  if (t_final < 0.0) {
    if (auto s = lcdmhd_problem_t_final(cfg.problem, &t_final)) return report(s);
  }
  for (double t : a.snapshots) {
    if (!(t >= 0.0 && t <= t_final)) {
      std::cerr << "error: snapshot time " << t << " outside [0, " << t_final
                << "]\n";
      return exit_config;
    }
  }

  Sim sim;
  if (auto s = lcdmhd_sim_create(&cfg, &sim.p)) return report(s);

  std::error_code ec;
  fs::create_directories(a.out, ec);
  if (ec) {
    std::cerr << "error: cannot create '" << a.out << "': " << ec.message()
              << '\n';
    return exit_config;
  }
  const fs::path dir(a.out);

  std::vector<double> stops = a.snapshots;
  std::sort(stops.begin(), stops.end());

  int nx = 0, ny = 0;
  lcdmhd_sim_dims(sim.p, &nx, &ny);
  std::cout << "run " << a.problem << " scheme=" << a.scheme << " mesh=" << nx
            << "x" << ny << " t_final=" << t_final << '\n';

  lcdmhd_status st = LCDMHD_OK;
  for (double t : stops) {
    if ((st = lcdmhd_sim_advance_to(sim.p, t))) break;
    const std::string p = (dir / ("snapshot_t" + time_tag(t) + ".dump")).string();
    if ((st = lcdmhd_sim_write_dump(sim.p, p.c_str()))) break;
    std::cout << "  snapshot " << p << '\n';
  }
  if (!st) st = lcdmhd_sim_advance_to(sim.p, t_final);

  double l1 = 0.0, linf = 0.0;
  if (!st) st = lcdmhd_sim_divergence_norms(sim.p, &l1, &linf);

  const int rc = st ? report(st) : exit_ok;
  const std::string dump_name = st ? "failure.dump" : "final.dump";

  // whatever happened, leave the last good state and the history behind
  double t = 0.0, mass = 0.0;
  long steps = 0;
  lcdmhd_sim_time(sim.p, &t);
  lcdmhd_sim_steps(sim.p, &steps);
  lcdmhd_sim_mass(sim.p, &mass);
  const std::string dump = (dir / dump_name).string();
  const std::string diag = (dir / "diagnostics.csv").string();
  if (auto s = lcdmhd_sim_write_dump(sim.p, dump.c_str())) return report(s);
  if (auto s = lcdmhd_sim_write_diagnostics_csv(sim.p, diag.c_str()))
    return report(s);

  nlohmann::json summary = {
      {"problem", a.problem}, {"scheme", a.scheme}, {"nx", nx},
      {"ny", ny},             {"t", t},             {"steps", steps},
      {"mass", mass},         {"status", rc == exit_ok ? "ok" : "failed"}};
  if (rc == exit_ok) {
    summary["div_l1"] = l1;
    summary["div_linf"] = linf;
  } else {
    summary["error"] = lcdmhd_last_error();
  }
  std::ofstream((dir / "summary.json").string()) << summary.dump(2) << '\n';

  std::cout << "  t=" << t << " steps=" << steps << " div_l1=" << l1
            << " div_linf=" << linf << '\n'
            << "  wrote " << dump << '\n';
  return rc;
}

struct ConvergenceArgs {
  std::string problem = "alfven";
  std::string scheme = "lcd-pccu";
  std::vector<int> meshes{20, 40, 80};
  double t_final = 5.0;
  double cfl = 0.25;
  std::string out;
};

int convergence(const ConvergenceArgs& a) {
  std::vector<lcdmhd_convergence_row> rows(a.meshes.size());
  const lcdmhd_status s = lcdmhd_convergence(
      a.problem.c_str(), a.scheme.c_str(), a.meshes.data(),
      static_cast<int>(a.meshes.size()), a.t_final, a.cfl, rows.data(),
      a.out.c_str());
  if (s) return report(s);
  std::printf("%6s %12s %8s %12s %8s\n", "mesh", "L1(u)", "rate", "L1(b3)",
              "rate");
  for (const auto& r : rows)
    std::printf("%6d %12.3e %8.2f %12.3e %8.2f\n", r.mesh, r.error_u, r.rate_u,
                r.error_b3, r.rate_b3);
  return exit_ok;
}

struct SliceArgs {
  std::string in;
  std::string axis = "x";
  double at = 0.0;
  std::vector<std::string> vars;
  std::string out;
};

int slice(const SliceArgs& a) {
  if (a.axis != "x" && a.axis != "y") {
    std::cerr << "error: --axis must be x or y\n";
    return exit_config;
  }
  std::string vars;
  for (const auto& v : a.vars) vars += (vars.empty() ? "" : ",") + v;
  if (auto s = lcdmhd_slice(a.in.c_str(), a.axis[0], a.at, vars.c_str(),
                            a.out.c_str()))
    return report(s);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LCD-PCCU ideal MHD benchmarks"};
  app.set_config("--config", "", "TOML/INI file with the same keys; flags win");
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads,
                 "worker threads (default: $LCDMHD_NUM_THREADS)");

  RunArgs ra;
  auto* r = app.add_subcommand("run", "run one benchmark problem");
  r->add_option("--problem", ra.problem)->required();
  r->add_option("--scheme", ra.scheme)
      ->check(CLI::IsMember({"lcd-pccu", "pccu", "lcd-pccu-uncorrected"}));
  r->add_option("--nx", ra.nx)->check(CLI::PositiveNumber);
  r->add_option("--ny", ra.ny)->check(CLI::PositiveNumber);
  r->add_option("--theta", ra.theta)->check(CLI::Range(1.0, 2.0));
  r->add_option("--cfl", ra.cfl)->check(CLI::PositiveNumber);
  r->add_option("--eps", ra.eps)->check(CLI::PositiveNumber);
  r->add_option("--t-final", ra.t_final);
  r->add_flag("--floor", ra.floor, "clamp rho and p instead of failing");
  r->add_option("--out", ra.out)->required();
  r->add_option("--snapshot-times", ra.snapshots)->delimiter(',');

  ConvergenceArgs ca;
  auto* c = app.add_subcommand("convergence", "mesh-refinement study");
  c->add_option("--problem", ca.problem);
  c->add_option("--meshes", ca.meshes)->delimiter(',');
  c->add_option("--scheme", ca.scheme)
      ->check(CLI::IsMember({"lcd-pccu", "pccu", "lcd-pccu-uncorrected"}));
  c->add_option("--t-final", ca.t_final)->check(CLI::PositiveNumber);
  c->add_option("--cfl", ca.cfl)->check(CLI::PositiveNumber);
  c->add_option("--out", ca.out)->required();

  SliceArgs sa;
  auto* s = app.add_subcommand("slice", "1-D cut through a field dump");
  s->add_option("--in", sa.in)->required()->check(CLI::ExistingFile);
  s->add_option("--axis", sa.axis)->check(CLI::IsMember({"x", "y"}));
  s->add_option("--at", sa.at)->required();
  s->add_option("--vars", sa.vars)->required()->delimiter(',');
  s->add_option("--out", sa.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_config;
  }

  lcdmhd_set_num_threads(threads);

  if (*r) return run(ra);
  if (*c) return convergence(ca);
  return slice(sa);
}
