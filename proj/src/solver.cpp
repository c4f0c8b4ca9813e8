#include "lcdmhd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "lcdmhd/eigensystem.hpp"
#include "lcdmhd/nonconservative.hpp"
#include "lcdmhd/reconstruction.hpp"

namespace lcdmhd {

namespace {

// Runs f(i) for i in [0, n) across the OpenMP team. The first exception
// thrown by any iteration is rethrown once the loop has finished.
template <class F>
void parallel_for(int n, F&& f) {
  std::exception_ptr err;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    try {
      f(i);
    } catch (...) {
#pragma omp critical(lcdmhd_parallel_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

// F or G from an already converted state pair.
Vec8 physical_flux(const PrimState& V, const Vec8& U, Direction dir) {
  const double rho = V.rho(), u = V.u(), v = V.vy(), w = V.w(), p = V.p();
  const double b1 = V.b1(), b2 = V.b2(), b3 = V.b3();
  const double pt = p + 0.5 * (b1 * b1 + b2 * b2 + b3 * b3);
  const double ub = u * b1 + v * b2 + w * b3;
  const double en = U[cons_idx::en];
  Vec8 F;
  if (dir == Direction::x) {
    F << rho * u, rho * u * u + pt - b1 * b1, rho * u * v - b1 * b2,
        rho * u * w - b1 * b3, 0.0, u * b2 - v * b1, u * b3 - w * b1,
        (en + pt) * u - ub * b1;
  } else {
    F << rho * v, rho * u * v - b1 * b2, rho * v * v + pt - b2 * b2,
        rho * v * w - b2 * b3, v * b1 - u * b2, 0.0, v * b3 - w * b2,
        (en + pt) * v - ub * b2;
  }
  return F;
}

}  // namespace

SchemeVariant parse_scheme_variant(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), '_', '-');
  if (t == "lcd-pccu") return SchemeVariant::lcd_pccu;
  if (t == "pccu") return SchemeVariant::pccu;
  if (t == "lcd-pccu-uncorrected") return SchemeVariant::lcd_pccu_uncorrected;
  throw ConfigError("unknown scheme '" + s +
                    "' (expected lcd-pccu, pccu or lcd-pccu-uncorrected)");
}

std::string to_string(SchemeVariant v) {
  switch (v) {
    case SchemeVariant::lcd_pccu:
      return "lcd-pccu";
    case SchemeVariant::pccu:
      return "pccu";
    case SchemeVariant::lcd_pccu_uncorrected:
      return "lcd-pccu-uncorrected";
  }
  return "?";
}

void SolverConfig::validate() const {
  GasModel g(gamma);
  SlopeLimiterConfig{theta}.validate();
  if (!(eps > 0.0)) throw ConfigError("eps must be > 0");
  if (!(floor_value > 0.0)) throw ConfigError("floor value must be > 0");
}

Solver::Solver(const Grid2D& grid, const SolverConfig& cfg)
    : grid_(grid), cfg_(cfg), gas_(cfg.gamma) {
  cfg_.validate();
  if (cfg_.bc.x == BoundaryKind::periodic && grid_.nx < 2)
    throw ConfigError("periodic x boundaries need nx >= 2");
  if (cfg_.bc.y == BoundaryKind::periodic && grid_.ny < 2)
    throw ConfigError("periodic y boundaries need ny >= 2");
  const int n = grid_.total();
  for (auto* v : {&V_, &VE_, &VW_, &VN_, &VS_, &UE_, &UW_, &UN_, &US_})
    v->assign(n, Vec8::Zero());
  for (auto* v : {&AE_, &AW_, &BE_, &BW_, &AN_, &AS_, &BN_, &BS_})
    v->assign(n, 0.0);
  Vhat_x_.assign((grid_.nx + 1) * grid_.ny, Vec8::Zero());
  Vhat_y_.assign(grid_.nx * (grid_.ny + 1), Vec8::Zero());
  Fx_.assign((grid_.nx + 1) * grid_.ny, Vec8::Zero());
  Fy_.assign(grid_.nx * (grid_.ny + 1), Vec8::Zero());
  Fx_aux_.assign((grid_.nx + 1) * grid_.ny, Vec2::Zero());
  Fy_aux_.assign(grid_.nx * (grid_.ny + 1), Vec2::Zero());
  div_.assign(grid_.nx * grid_.ny, 0.0);
}

PrimState Solver::cell_prim(const Vec8& U, int j, int k) const {
  if (!U.allFinite())
    throw AdmissibilityError("non-finite component", std::nan("")).at(j, k);
  if (cfg_.floor) {
    Vec8 Uf = U;
    Uf[cons_idx::rho] = std::max(Uf[cons_idx::rho], cfg_.floor_value);
    PrimState V = cons_to_prim(ConsState(Uf), gas_);
    V.v[prim_idx::p] = std::max(V.p(), cfg_.floor_value);
    return V;
  }
  try {
    PrimState V = cons_to_prim(ConsState(U), gas_);
    require_admissible(V);
    return V;
  } catch (const AdmissibilityError& e) {
    throw e.at(j, k);
  }
}

PrimState Solver::interface_prim(const Vec8& UL, const Vec8& UR) const {
  PrimState V = cons_to_prim(ConsState(0.5 * (UL + UR)), gas_);
  if (cfg_.floor) V.v[prim_idx::p] = std::max(V.p(), cfg_.floor_value);
  return V;
}

void Solver::check_face(Vec8& V, int j, int k) const {
  if (cfg_.floor && V.allFinite()) {
    V[prim_idx::rho] = std::max(V[prim_idx::rho], cfg_.floor_value);
    V[prim_idx::p] = std::max(V[prim_idx::p], cfg_.floor_value);
    return;
  }
  try {
    require_admissible(PrimState(V));
  } catch (const AdmissibilityError& e) {
    throw AdmissibilityError("face " + e.quantity(), e.value()).at(j, k);
  }
}

DivergenceNorms Solver::divergence_norms() const {
  DivergenceNorms n;
  for (double d : div_) {
    n.l1 += std::abs(d);
    n.linf = std::max(n.linf, std::abs(d));
  }
  n.l1 *= grid_.dx() * grid_.dy();
  return n;
}

// One row (x) of interfaces i = 0..nx between cells i-1 and i.
void Solver::reconstruct_x(int k, const AugField& in) {
  const Grid2D& g = grid_;
  const double h = g.dx();
  const SlopeLimiterConfig lim{cfg_.theta};
  const bool characteristic = cfg_.variant != SchemeVariant::pccu;
  for (int i = 0; i <= g.nx; ++i) {
    const std::array<Vec8, 4> st{V_[g.index(i - 2, k)], V_[g.index(i - 1, k)],
                                 V_[g.index(i, k)], V_[g.index(i + 1, k)]};
    std::pair<Vec8, Vec8> faces;
    if (characteristic) {
      const PrimState Vh = interface_prim(in.u(i - 1, k), in.u(i, k));
      Vhat_x_[k * (g.nx + 1) + i] = Vh.v;
      const PrimEigenSystem pe = eigensystem_prim(Vh, gas_, Direction::x);
      faces = face_values_from_slopes(
          characteristic_slopes(st, pe.inverse_transform, lim, h),
          pe.transform, h);
    } else {
      faces = componentwise_face_values(st, lim, h);
    }
    VE_[g.index(i - 1, k)] = faces.first;
    VW_[g.index(i, k)] = faces.second;
  }
  for (int c = -1; c <= g.nx; ++c) {
    const int m = g.index(c - 1, k), o = g.index(c, k), p = g.index(c + 1, k);
    const double sa = limited_slope(in.A[m], in.A[o], in.A[p], lim.theta, h);
    const double sb = limited_slope(in.B[m], in.B[o], in.B[p], lim.theta, h);
    AE_[o] = in.A[o] + 0.5 * h * sa;
    AW_[o] = in.A[o] - 0.5 * h * sa;
    BE_[o] = in.B[o] + 0.5 * h * sb;
    BW_[o] = in.B[o] - 0.5 * h * sb;
  }
}

// One column (y) of interfaces m = 0..ny between cells m-1 and m.
void Solver::reconstruct_y(int j, const AugField& in) {
  const Grid2D& g = grid_;
  const double h = g.dy();
  const SlopeLimiterConfig lim{cfg_.theta};
  const bool characteristic = cfg_.variant != SchemeVariant::pccu;
  for (int m = 0; m <= g.ny; ++m) {
    const std::array<Vec8, 4> st{V_[g.index(j, m - 2)], V_[g.index(j, m - 1)],
                                 V_[g.index(j, m)], V_[g.index(j, m + 1)]};
    std::pair<Vec8, Vec8> faces;
    if (characteristic) {
      const PrimState Vh = interface_prim(in.u(j, m - 1), in.u(j, m));
      Vhat_y_[j * (g.ny + 1) + m] = Vh.v;
      const PrimEigenSystem pe = eigensystem_prim(Vh, gas_, Direction::y);
      faces = face_values_from_slopes(
          characteristic_slopes(st, pe.inverse_transform, lim, h),
          pe.transform, h);
    } else {
      faces = componentwise_face_values(st, lim, h);
    }
    VN_[g.index(j, m - 1)] = faces.first;
    VS_[g.index(j, m)] = faces.second;
  }
  for (int c = -1; c <= g.ny; ++c) {
    const int m = g.index(j, c - 1), o = g.index(j, c), p = g.index(j, c + 1);
    const double sa = limited_slope(in.A[m], in.A[o], in.A[p], lim.theta, h);
    const double sb = limited_slope(in.B[m], in.B[o], in.B[p], lim.theta, h);
    AN_[o] = in.A[o] + 0.5 * h * sa;
    AS_[o] = in.A[o] - 0.5 * h * sa;
    BN_[o] = in.B[o] + 0.5 * h * sb;
    BS_[o] = in.B[o] - 0.5 * h * sb;
  }
}

void Solver::correct_cell(int j, int k, const AugField& in) {
  const int o = grid_.index(j, k);
  CorrectionInput ci;
  ci.b1_avg = in.U[o][cons_idx::b1];
  ci.b2_avg = in.U[o][cons_idx::b2];
  ci.a_avg = in.A[o];
  ci.b_avg = in.B[o];
  ci.b1_east_hat = VE_[o][prim_idx::b1];
  ci.b1_west_hat = VW_[o][prim_idx::b1];
  ci.b2_north_hat = VN_[o][prim_idx::b2];
  ci.b2_south_hat = VS_[o][prim_idx::b2];
  ci.dx = grid_.dx();
  ci.dy = grid_.dy();
  const CorrectionResult r = divergence_correction(ci);
  VE_[o][prim_idx::b1] = r.b1_east;
  VW_[o][prim_idx::b1] = r.b1_west;
  VN_[o][prim_idx::b2] = r.b2_north;
  VS_[o][prim_idx::b2] = r.b2_south;
}

double Solver::flux_x_row(int k, const AugField& in) {
  const Grid2D& g = grid_;
  const int n = g.nx;
  const bool lcd = cfg_.variant != SchemeVariant::pccu;
  const double dy = g.dy();
  for (int c = -1; c < n; ++c) {
    const int o = g.index(c, k);
    check_face(VE_[o], c, k);
    UE_[o] = prim_to_cons(PrimState(VE_[o]), gas_).v;
  }
  for (int c = 0; c <= n; ++c) {
    const int o = g.index(c, k);
    check_face(VW_[o], c, k);
    UW_[o] = prim_to_cons(PrimState(VW_[o]), gas_).v;
  }

  double amax = 0.0;
  Vec8 Im = Vec8::Zero(), Ip = Vec8::Zero();
  for (int i = 0; i <= n; ++i) {
    const int l = g.index(i - 1, k), r = g.index(i, k);
    const Vec8 Qpsi =
        interface_q(ConsState(UE_[l]), ConsState(UW_[r]), Direction::x);
    if (i == 0) {
      Im.setZero();
      Ip = Qpsi;
    } else {
      const Vec8 Qc = cell_q(ConsState(in.U[l]), VE_[l][prim_idx::b1],
                             VW_[l][prim_idx::b1]);
      Im = Ip + Qc;
      Ip = Im + Qpsi;
    }
    const PrimState VL(VE_[l]), VR(VW_[r]);
    const Vec8 KE = physical_flux(VL, UE_[l], Direction::x) - Im;
    const Vec8 KW = physical_flux(VR, UW_[r], Direction::x) - Ip;
    const Vec8 lamE = eigenvalues(VL, gas_, Direction::x);
    const Vec8 lamW = eigenvalues(VR, gas_, Direction::x);
    const LocalSpeeds s = local_speeds(lamE, lamW);
    amax = std::max({amax, s.s_plus, -s.s_minus});

    const int f = k * (n + 1) + i;
    if (lcd) {
      const EigenSystem es =
          eigensystem_cons(PrimState(Vhat_x_[f]), gas_, Direction::x);
      Fx_[f] = lcd_flux(KE, KW, UE_[l], UW_[r], es.right, es.left,
                        spectral_bounds(lamE, lamW, cfg_.eps));
    } else {
      Fx_[f] = pccu_flux(KE, KW, UE_[l], UW_[r], s);
    }

    const double uy = (V_[g.index(i - 1, k + 1)][prim_idx::u] -
                       V_[g.index(i - 1, k - 1)][prim_idx::u] +
                       V_[g.index(i, k + 1)][prim_idx::u] -
                       V_[g.index(i, k - 1)][prim_idx::u]) /
                      (4.0 * dy);
    const Vec2 FE = aux_flux_x(VL, {AE_[l], BE_[l]}, uy);
    const Vec2 FW = aux_flux_x(VR, {AW_[r], BW_[r]}, uy);
    Fx_aux_[f] = cu_aux_flux(FE, FW, Vec2(AE_[l], BE_[l]),
                             Vec2(AW_[r], BW_[r]), s);
  }
  return amax;
}

double Solver::flux_y_col(int j, const AugField& in) {
  const Grid2D& g = grid_;
  const int n = g.ny;
  const bool lcd = cfg_.variant != SchemeVariant::pccu;
  const double dx = g.dx();
  for (int c = -1; c < n; ++c) {
    const int o = g.index(j, c);
    check_face(VN_[o], j, c);
    UN_[o] = prim_to_cons(PrimState(VN_[o]), gas_).v;
  }
  for (int c = 0; c <= n; ++c) {
    const int o = g.index(j, c);
    check_face(VS_[o], j, c);
    US_[o] = prim_to_cons(PrimState(VS_[o]), gas_).v;
  }

  double amax = 0.0;
  Vec8 Im = Vec8::Zero(), Ip = Vec8::Zero();
  for (int m = 0; m <= n; ++m) {
    const int l = g.index(j, m - 1), r = g.index(j, m);
    const Vec8 Qpsi =
        interface_q(ConsState(UN_[l]), ConsState(US_[r]), Direction::y);
    if (m == 0) {
      Im.setZero();
      Ip = Qpsi;
    } else {
      const Vec8 Qc = cell_q(ConsState(in.U[l]), VN_[l][prim_idx::b2],
                             VS_[l][prim_idx::b2]);
      Im = Ip + Qc;
      Ip = Im + Qpsi;
    }
    const PrimState VL(VN_[l]), VR(VS_[r]);
    const Vec8 LN = physical_flux(VL, UN_[l], Direction::y) - Im;
    const Vec8 LS = physical_flux(VR, US_[r], Direction::y) - Ip;
    const Vec8 lamN = eigenvalues(VL, gas_, Direction::y);
    const Vec8 lamS = eigenvalues(VR, gas_, Direction::y);
    const LocalSpeeds s = local_speeds(lamN, lamS);
    amax = std::max({amax, s.s_plus, -s.s_minus});

    const int f = j * (n + 1) + m;
    if (lcd) {
      const EigenSystem es =
          eigensystem_cons(PrimState(Vhat_y_[f]), gas_, Direction::y);
      Fy_[f] = lcd_flux(LN, LS, UN_[l], US_[r], es.right, es.left,
                        spectral_bounds(lamN, lamS, cfg_.eps));
    } else {
      Fy_[f] = pccu_flux(LN, LS, UN_[l], US_[r], s);
    }

    const double vx = (V_[g.index(j + 1, m - 1)][prim_idx::v] -
                       V_[g.index(j - 1, m - 1)][prim_idx::v] +
                       V_[g.index(j + 1, m)][prim_idx::v] -
                       V_[g.index(j - 1, m)][prim_idx::v]) /
                      (4.0 * dx);
    const Vec2 GN = aux_flux_y(VL, {AN_[l], BN_[l]}, vx);
    const Vec2 GS = aux_flux_y(VR, {AS_[r], BS_[r]}, vx);
    Fy_aux_[f] = cu_aux_flux(GN, GS, Vec2(AN_[l], BN_[l]),
                             Vec2(AS_[r], BS_[r]), s);
  }
  return amax;
}

RhsInfo Solver::rhs(const AugField& in, AugField& out) {
  const Grid2D& g = grid_;
  const int nx = g.nx, ny = g.ny;
  const int G = Grid2D::ghosts;
  if (static_cast<int>(in.U.size()) != g.total())
    throw ConfigError("rhs: field does not match the solver grid");

  // cell primitives, ghosts included (ghost errors map to the source cell
  // only approximately, so they are reported with their own index)
  const int rows = ny + 2 * G;
  std::vector<double> row_min_rho(rows), row_min_p(rows);
  parallel_for(rows, [&](int r) {
    const int k = r - G;
    double mr = std::numeric_limits<double>::infinity(), mp = mr;
    for (int j = -G; j < nx + G; ++j) {
      const int o = g.index(j, k);
      const PrimState V = cell_prim(in.U[o], j, k);
      V_[o] = V.v;
      if (j >= 0 && j < nx && k >= 0 && k < ny) {
        mr = std::min(mr, V.rho());
        mp = std::min(mp, V.p());
      }
    }
    row_min_rho[r] = mr;
    row_min_p[r] = mp;
  });

  parallel_for(ny, [&](int k) { reconstruct_x(k, in); });
  parallel_for(nx, [&](int j) { reconstruct_y(j, in); });

  if (cfg_.variant != SchemeVariant::lcd_pccu_uncorrected) {
    parallel_for(ny, [&](int k) {
      for (int j = 0; j < nx; ++j) correct_cell(j, k, in);
    });
  }
  // faces on the far side of a periodic boundary belong to the wrapped cell
  if (cfg_.bc.x == BoundaryKind::periodic) {
    for (int k = 0; k < ny; ++k) {
      VE_[g.index(-1, k)] = VE_[g.index(nx - 1, k)];
      VW_[g.index(nx, k)] = VW_[g.index(0, k)];
    }
  }
  if (cfg_.bc.y == BoundaryKind::periodic) {
    for (int j = 0; j < nx; ++j) {
      VN_[g.index(j, -1)] = VN_[g.index(j, ny - 1)];
      VS_[g.index(j, ny)] = VS_[g.index(j, 0)];
    }
  }

  const double dx = g.dx(), dy = g.dy();
  parallel_for(ny, [&](int k) {
    for (int j = 0; j < nx; ++j) {
      const int o = g.index(j, k);
      div_[k * nx + j] = discrete_divergence(
          VE_[o][prim_idx::b1], VW_[o][prim_idx::b1], VN_[o][prim_idx::b2],
          VS_[o][prim_idx::b2], dx, dy);
    }
  });

  std::vector<double> ax(ny), ay(nx);
  parallel_for(ny, [&](int k) { ax[k] = flux_x_row(k, in); });
  parallel_for(nx, [&](int j) { ay[j] = flux_y_col(j, in); });

  if (static_cast<int>(out.U.size()) != g.total()) out = AugField(g);
  out.grid = g;
  parallel_for(ny, [&](int k) {
    for (int j = 0; j < nx; ++j) {
      const int o = g.index(j, k);
      const int fx = k * (nx + 1) + j;
      const int fy = j * (ny + 1) + k;
      out.U[o] = -(Fx_[fx + 1] - Fx_[fx]) / dx - (Fy_[fy + 1] - Fy_[fy]) / dy;
      const Vec2 d = -(Fx_aux_[fx + 1] - Fx_aux_[fx]) / dx -
                     (Fy_aux_[fy + 1] - Fy_aux_[fy]) / dy;
      out.A[o] = d[0];
      out.B[o] = d[1];
    }
  });
  fill_ghosts(out, cfg_.bc);

  RhsInfo info;
  info.a_x = *std::max_element(ax.begin(), ax.end());
  info.a_y = *std::max_element(ay.begin(), ay.end());
  info.min_rho = *std::min_element(row_min_rho.begin(), row_min_rho.end());
  info.min_p = *std::min_element(row_min_p.begin(), row_min_p.end());
  return info;
}

Simulation::Simulation(AugField initial, const SolverConfig& cfg, double cfl,
                       double dt_min)
    : solver_(initial.grid, cfg),
      u_(std::move(initial)),
      cfl_(cfl),
      dt_min_(dt_min) {
  TimeControls{cfl_, 0.0, dt_min_}.validate();
  fill_ghosts(u_, cfg.bc);
}

DiagnosticsSample Simulation::sample(const RhsInfo& info, double dt) const {
  DiagnosticsSample s;
  const DivergenceNorms dn = solver_.divergence_norms();
  s.t = t_;
  s.dt = dt;
  s.div_l1 = dn.l1;
  s.div_linf = dn.linf;
  s.mass = total_mass(u_);
  s.min_rho = info.min_rho;
  s.min_p = info.min_p;
  return s;
}

DivergenceNorms Simulation::sample_now() {
  const RhsInfo info = solver_.rhs(u_, k1_);
  diag_.push_back(sample(info, 0.0));
  return solver_.divergence_norms();
}

void Simulation::advance_to(double t_target) {
  if (!(t_target >= t_)) {
    std::ostringstream os;
    os << "cannot advance to t = " << t_target << " from t = " << t_;
    throw ConfigError(os.str());
  }
  const TimeControls tc{cfl_, t_target, dt_min_};
  auto L = [this](const AugField& u, AugField& k) { solver_.rhs(u, k); };
  const Grid2D& g = u_.grid;
  while (t_ < t_target) {
    const RhsInfo info = solver_.rhs(u_, k1_);
    const double dt = compute_dt(g.dx(), g.dy(), info.a_x, info.a_y, tc, t_);
    diag_.push_back(sample(info, dt));
    AugField next = u_;
    ssp_rk3_step(next, L, dt, &k1_);
    u_ = std::move(next);
    ++steps_;
    t_ = (dt == t_target - t_) ? t_target : t_ + dt;
  }
}

}  // namespace lcdmhd
