#pragma once

// Semi-discrete right-hand side on the whole grid and the time loop.
//
// RHS pipeline: cell primitives -> characteristic (or componentwise)
// reconstruction -> b1/b2 slope correction -> face conversion -> I^x, I^y
// recursion -> global fluxes K, L -> LCD or CU interface fluxes -> CU fluxes
// for (A, B) -> flux differences.

#include <functional>
#include <string>
#include <vector>

#include "lcdmhd/field.hpp"
#include "lcdmhd/numerical_flux.hpp"
#include "lcdmhd/time_stepper.hpp"

namespace lcdmhd {

enum class SchemeVariant { lcd_pccu, pccu, lcd_pccu_uncorrected };

/// Accepts lcd-pccu, pccu, lcd-pccu-uncorrected (underscores also allowed).
SchemeVariant parse_scheme_variant(const std::string& s);
std::string to_string(SchemeVariant v);

struct SolverConfig {
  double gamma = 5.0 / 3.0;
  double theta = 1.3;
  double eps = default_eps;
  SchemeVariant variant = SchemeVariant::lcd_pccu;
  BoundaryConditions bc;
  /// Clamp rho and p from below instead of failing.
  bool floor = false;
  double floor_value = 1e-12;

  void validate() const;
};

struct DivergenceNorms {
  double l1 = 0.0;
  double linf = 0.0;
};

/// (b1^E - b1^W)/dx + (b2^N - b2^S)/dy of one cell.
inline double discrete_divergence(double b1_east, double b1_west,
                                  double b2_north, double b2_south, double dx,
                                  double dy) {
  return (b1_east - b1_west) / dx + (b2_north - b2_south) / dy;
}

struct RhsInfo {
  double a_x = 0.0;  ///< max over x-interfaces of max(s+, -s-)
  double a_y = 0.0;
  double min_rho = 0.0;
  double min_p = 0.0;
};

class Solver {
 public:
  Solver(const Grid2D& grid, const SolverConfig& cfg);

  const Grid2D& grid() const { return grid_; }
  const SolverConfig& config() const { return cfg_; }
  const GasModel& gas() const { return gas_; }

  /// `in` must have its ghosts filled; `out` gets the time derivative of
  /// the interior with ghosts filled by the same boundary rule, so linear
  /// combinations of fields keep consistent ghosts.
  RhsInfo rhs(const AugField& in, AugField& out);

  /// Discrete divergence per interior cell (row-major, nx*ny) from the
  /// face values of the last rhs call.
  const std::vector<double>& divergence() const { return div_; }
  DivergenceNorms divergence_norms() const;

 private:
  PrimState cell_prim(const Vec8& U, int j, int k) const;
  PrimState interface_prim(const Vec8& UL, const Vec8& UR) const;
  void check_face(Vec8& V, int j, int k) const;
  void reconstruct_x(int k, const AugField& in);
  void reconstruct_y(int j, const AugField& in);
  void correct_cell(int j, int k, const AugField& in);
  double flux_x_row(int k, const AugField& in);
  double flux_y_col(int j, const AugField& in);

  Grid2D grid_;
  SolverConfig cfg_;
  GasModel gas_;

  std::vector<Vec8> V_;
  std::vector<Vec8> VE_, VW_, VN_, VS_;
  std::vector<Vec8> UE_, UW_, UN_, US_;
  std::vector<double> AE_, AW_, BE_, BW_, AN_, AS_, BN_, BS_;
  std::vector<Vec8> Vhat_x_, Vhat_y_;  // primitive interface averages
  std::vector<Vec8> Fx_, Fy_;
  std::vector<Vec2> Fx_aux_, Fy_aux_;
  std::vector<double> div_;
};

struct DiagnosticsSample {
  double t = 0.0;
  double dt = 0.0;
  double div_l1 = 0.0;
  double div_linf = 0.0;
  double mass = 0.0;
  double min_rho = 0.0;
  double min_p = 0.0;
};

/// Time-stepping driver. Diagnostics are sampled from the first-stage RHS
/// of every step, plus one evaluation at the final state.
class Simulation {
 public:
  Simulation(AugField initial, const SolverConfig& cfg, double cfl = 0.25,
             double dt_min = 1e-12);

  /// Steps until t (landing on it exactly). Throws AdmissibilityError or
  /// UnstableRunError; the state is then left at the last completed step.
  void advance_to(double t);

  double time() const { return t_; }
  long steps() const { return steps_; }
  const AugField& field() const { return u_; }
  const Solver& solver() const { return solver_; }
  const std::vector<DiagnosticsSample>& diagnostics() const { return diag_; }

  /// Evaluates the RHS at the current state and appends a sample with
  /// dt = 0; returns the divergence norms of that evaluation.
  DivergenceNorms sample_now();

 private:
  DiagnosticsSample sample(const RhsInfo& info, double dt) const;

  Solver solver_;
  AugField u_;
  AugField k1_;
  double cfl_;
  double dt_min_;
  double t_ = 0.0;
  long steps_ = 0;
  std::vector<DiagnosticsSample> diag_;
};

}  // namespace lcdmhd
