#include "lcdmhd/eigensystem.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace lcdmhd {

namespace {

// State expressed in the normal/tangential frame of a direction:
// (u_N, u_T, b_N, b_T) = (u, v, b1, b2) in x and (v, u, b2, b1) in y.
struct Frame {
  double rho, uN, uT, w, p, bN, bT, b3;
};

Frame to_frame(const PrimState& V, Direction dir) {
  if (dir == Direction::x)
    return {V.rho(), V.u(), V.vy(), V.w(), V.p(), V.b1(), V.b2(), V.b3()};
  return {V.rho(), V.vy(), V.u(), V.w(), V.p(), V.b2(), V.b1(), V.b3()};
}

// Squared speeds plus the pieces needed to form the alpha coefficients
// without cancellation. disc = cf2 - cs2.
struct SpeedAlgebra {
  double c2, ca2, bt2, cf2, cs2, disc;
};

SpeedAlgebra speed_algebra(const Frame& f, double gamma) {
  SpeedAlgebra s{};
  s.c2 = gamma * f.p / f.rho;
  s.ca2 = f.bN * f.bN / f.rho;
  s.bt2 = (f.bT * f.bT + f.b3 * f.b3) / f.rho;
  if (s.bt2 == 0.0) {
    s.cf2 = std::max(s.c2, s.ca2);
    s.cs2 = std::min(s.c2, s.ca2);
    s.disc = s.cf2 - s.cs2;
    return s;
  }
  const double d = s.c2 - s.ca2;
  s.disc = std::sqrt(d * d + s.bt2 * s.bt2 + 2.0 * s.bt2 * (s.c2 + s.ca2));
  s.cf2 = 0.5 * (s.c2 + s.ca2 + s.bt2 + s.disc);
  s.cs2 = s.cf2 > 0.0 ? s.c2 * s.ca2 / s.cf2 : 0.0;
  s.cs2 = std::min(s.cs2, std::min(s.c2, s.ca2));
  return s;
}

// 0.5 * (disc + y) evaluated stably; when y < 0 the product form
// 2 * bt2 * other / (disc - y) is used (disc^2 - y^2 = 4 * bt2 * other).
double half_sum(double disc, double y, double bt2, double other) {
  if (y >= 0.0) return 0.5 * (disc + y);
  return 2.0 * bt2 * other / (disc - y);
}

double cf2_minus_ca2(const SpeedAlgebra& s) {
  return half_sum(s.disc, s.c2 - s.ca2 + s.bt2, s.bt2, s.ca2);
}
double cf2_minus_c2(const SpeedAlgebra& s) {
  return half_sum(s.disc, s.ca2 - s.c2 + s.bt2, s.bt2, s.c2);
}
double c2_minus_cs2(const SpeedAlgebra& s) {
  return half_sum(s.disc, s.c2 - s.ca2 - s.bt2, s.bt2, s.c2);
}

void fill_betas(const Frame& f, EigenCoefficients& e) {
  e.beta1 = f.bN >= 0.0 ? 1.0 : -1.0;
  const double bt = std::hypot(f.bT, f.b3);
  e.degenerate = (bt == 0.0);
  if (e.degenerate) {
    e.beta2 = e.beta3 = 1.0 / std::sqrt(2.0);
  } else {
    e.beta2 = f.bT / bt;
    e.beta3 = f.b3 / bt;
  }
}

// With b_T = b_3 = 0 the magnetosonic pair collapses onto (c, c_a). Away
// from the triple point c = c_a the constant pairs (1,1) and
// (1/sqrt2, 1/sqrt2) are not eigenvector mixtures, so the continuous limit
// of the general formulas is used; the constant pair only where c = c_a.
void degenerate_alphas(const SpeedAlgebra& s, double triple_value,
                       EigenCoefficients& e) {
  if (s.ca2 < s.c2) {
    e.alpha_f = 1.0;
    e.alpha_s = 0.0;
  } else if (s.ca2 > s.c2) {
    e.alpha_f = 0.0;
    e.alpha_s = 1.0;
  } else {
    e.alpha_f = e.alpha_s = triple_value;
  }
}

EigenCoefficients cons_coefficients(const Frame& f, const SpeedAlgebra& s) {
  EigenCoefficients e;
  fill_betas(f, e);
  if (e.degenerate) {
    degenerate_alphas(s, 1.0, e);
  } else {
    e.alpha_f = std::sqrt(std::max(cf2_minus_ca2(s), 0.0) / s.disc);
    e.alpha_s = std::sqrt(std::max(cf2_minus_c2(s), 0.0) / s.disc);
  }
  return e;
}

EigenCoefficients prim_coefficients(const Frame& f, const SpeedAlgebra& s) {
  EigenCoefficients e;
  fill_betas(f, e);
  if (e.degenerate) {
    degenerate_alphas(s, 1.0 / std::sqrt(2.0), e);
  } else {
    e.alpha_f = std::sqrt(std::max(c2_minus_cs2(s), 0.0) / s.disc);
    e.alpha_s = std::sqrt(std::max(cf2_minus_c2(s), 0.0) / s.disc);
  }
  return e;
}

Vec8 lambdas_from(double uN, double cf, double ca, double cs) {
  Vec8 l;
  l << uN - cf, uN - ca, uN - cs, uN, uN, uN + cs, uN + ca, uN + cf;
  return l;
}

void require_positive(const Frame& f) {
  if (!(f.rho > 0.0)) throw AdmissibilityError("density", f.rho);
  if (!(f.p > 0.0)) throw AdmissibilityError("pressure", f.p);
}

// Moves a matrix built in the x frame to the y direction: R -> P R for
// right-eigenvector matrices (rows permuted), L -> L P for left ones.
void swap_rows(Mat8& m, int a, int b) { m.row(a).swap(m.row(b)); }
void swap_cols(Mat8& m, int a, int b) { m.col(a).swap(m.col(b)); }

// Conservative eigenvectors in the x frame, canonical ordering
// (rho, mN, mT, mz, bN, bT, b3, E).
void build_cons_x(const Frame& f, double gamma, Mat8& R, Mat8& L) {
  using namespace cons_idx;
  const SpeedAlgebra s = speed_algebra(f, gamma);
  const EigenCoefficients e = cons_coefficients(f, s);
  const double c = std::sqrt(s.c2), ca = std::sqrt(s.ca2);
  const double cf = std::sqrt(s.cf2), cs = std::sqrt(s.cs2);
  const double g1 = 1.0 - gamma, g2 = 2.0 - gamma;
  const double g21 = g2 / g1;
  const double af = e.alpha_f, as = e.alpha_s;
  const double b1s = e.beta1, be2 = e.beta2, be3 = e.beta3;
  const double sr = std::sqrt(f.rho);
  const double uN = f.uN, uT = f.uT, w = f.w;
  const double uu = uN * uN + uT * uT + w * w;
  const double tang = be2 * uT + be3 * w;

  const double theta1 = 0.5 / (af * af * s.c2 * (s.cf2 - g21 * s.c2) +
                               as * as * s.cf2 * (s.cs2 - g21 * s.c2));
  // a = c in the alpha_f^2 c_f a beta_1 term
  const double theta2 = 0.5 / (af * af * cf * c * b1s + as * as * cs * ca * b1s);

  R.setZero();
  L.setZero();

  // fast waves: columns 0 (s=+1, u_N - c_f) and 7 (s=-1, u_N + c_f)
  for (const auto& [i, sg] : {std::pair{0, 1.0}, std::pair{7, -1.0}}) {
    const double mu = -af * s.cf2 / g1 - sg * af * cf * uN +
                      sg * as * ca * b1s * tang + g21 * af * (s.cf2 - s.c2);
    R(rho, i) = af;
    R(mx, i) = af * (uN - sg * cf);
    R(my, i) = af * uT + sg * as * b1s * be2 * ca;
    R(mz, i) = af * w + sg * as * b1s * be3 * ca;
    R(b2, i) = as * be2 * cf / sr;
    R(b3, i) = as * be3 * cf / sr;
    R(en, i) = 0.5 * af * uu + mu;

    const double k = theta1 * sr * as * cf * (s.cs2 - g21 * s.c2);
    L(i, rho) = 0.5 * theta1 * af * s.c2 * uu +
                sg * theta2 * (af * c * uN * b1s - as * cs * tang);
    L(i, mx) = -theta1 * af * s.c2 * uN - sg * theta2 * af * c * b1s;
    L(i, my) = -theta1 * af * s.c2 * uT + sg * theta2 * as * cs * be2;
    L(i, mz) = -theta1 * af * s.c2 * w + sg * theta2 * as * cs * be3;
    L(i, b2) = k * be2;
    L(i, b3) = k * be3;
    L(i, en) = theta1 * af * s.c2;
  }

  // Alfven waves: columns 1 (s=+1) and 6 (s=-1)
  for (const auto& [i, sg] : {std::pair{1, 1.0}, std::pair{6, -1.0}}) {
    R(my, i) = sg * b1s * be3;
    R(mz, i) = -sg * b1s * be2;
    R(b2, i) = be3 / sr;
    R(b3, i) = -be2 / sr;
    R(en, i) = sg * b1s * (be3 * uT - be2 * w);

    L(i, rho) = -0.5 * sg * b1s * (be3 * uT - be2 * w);
    L(i, my) = 0.5 * sg * b1s * be3;
    L(i, mz) = -0.5 * sg * b1s * be2;
    L(i, b2) = 0.5 * sr * be3;
    L(i, b3) = -0.5 * sr * be2;
  }

  // slow waves: columns 2 (s=+1) and 5 (s=-1)
  for (const auto& [i, sg] : {std::pair{2, 1.0}, std::pair{5, -1.0}}) {
    const double mu = -as * s.cs2 / g1 - sg * as * cs * uN -
                      sg * af * c * b1s * tang + g21 * as * (s.cs2 - s.c2);
    R(rho, i) = as;
    R(mx, i) = as * (uN - sg * cs);
    R(my, i) = as * uT - sg * af * b1s * be2 * c;
    R(mz, i) = as * w - sg * af * b1s * be3 * c;
    R(b2, i) = -af * be2 * s.c2 / (cf * sr);
    R(b3, i) = -af * be3 * s.c2 / (cf * sr);
    R(en, i) = 0.5 * as * uu + mu;

    const double k = -theta1 * sr * af * cf * (s.cf2 - g21 * s.c2);
    L(i, rho) = 0.5 * theta1 * as * s.cf2 * uu +
                sg * theta2 * (as * ca * uN * b1s + af * cf * tang);
    L(i, mx) = -theta1 * as * s.cf2 * uN - sg * theta2 * as * ca * b1s;
    L(i, my) = -theta1 * as * s.cf2 * uT - sg * theta2 * af * cf * be2;
    L(i, mz) = -theta1 * as * s.cf2 * w - sg * theta2 * af * cf * be3;
    L(i, b2) = k * be2;
    L(i, b3) = k * be3;
    L(i, en) = theta1 * as * s.cf2;
  }

  // entropy wave
  R(rho, 3) = 1.0;
  R(mx, 3) = uN;
  R(my, 3) = uT;
  R(mz, 3) = w;
  R(en, 3) = 0.5 * uu;
  const double k4 = af * af * s.c2 + as * as * s.cf2;
  L(3, rho) = 1.0 - theta1 * k4 * uu;
  L(3, mx) = 2.0 * theta1 * k4 * uN;
  L(3, my) = 2.0 * theta1 * k4 * uT;
  L(3, mz) = 2.0 * theta1 * k4 * w;
  L(3, b2) = 2.0 * theta1 * sr * af * as * be2 * cf * (s.cf2 - s.cs2);
  L(3, b3) = 2.0 * theta1 * sr * af * as * be3 * cf * (s.cf2 - s.cs2);
  L(3, en) = -2.0 * theta1 * k4;

  // Divergence wave. r_5 = e_b1 alone is not an eigenvector of
  // dF/dU - Q^x; it needs dE/db1 = b_N. The left rows take the matching
  // rank-one update.
  R(b1, 4) = 1.0;
  R(en, 4) = f.bN;
  L(4, b1) = 1.0;
  for (int i = 0; i < 8; ++i) L(i, b1) -= f.bN * L(i, en);
}

// Primitive eigenvectors in the x frame, ordering (rho, uN, uT, w, p, bN, bT, b3).
void build_prim_x(const Frame& f, double gamma, Mat8& T, Mat8& Tinv) {
  using namespace prim_idx;
  const SpeedAlgebra s = speed_algebra(f, gamma);
  const EigenCoefficients e = prim_coefficients(f, s);
  const double c = std::sqrt(s.c2);
  const double cf = std::sqrt(s.cf2), cs = std::sqrt(s.cs2);
  const double af = e.alpha_f, as = e.alpha_s;
  const double b1s = e.beta1, be2 = e.beta2, be3 = e.beta3;
  const double sr = std::sqrt(f.rho), r = f.rho;
  const double inv2c2 = 0.5 / s.c2;

  T.setZero();
  Tinv.setZero();

  for (const auto& [i, sg] : {std::pair{0, 1.0}, std::pair{7, -1.0}}) {
    T(rho, i) = af * r;
    T(u, i) = -sg * af * cf;
    T(v, i) = sg * as * cs * b1s * be2;
    T(w, i) = sg * as * cs * b1s * be3;
    T(p, i) = af * r * s.c2;
    T(b2, i) = as * sr * c * be2;
    T(b3, i) = as * sr * c * be3;

    Tinv(i, u) = inv2c2 * (-sg * af * cf);
    Tinv(i, v) = inv2c2 * (sg * as * cs * b1s * be2);
    Tinv(i, w) = inv2c2 * (sg * as * cs * b1s * be3);
    Tinv(i, p) = inv2c2 * af / r;
    Tinv(i, b2) = inv2c2 * as * c * be2 / sr;
    Tinv(i, b3) = inv2c2 * as * c * be3 / sr;
  }

  for (const auto& [i, sg] : {std::pair{1, 1.0}, std::pair{6, -1.0}}) {
    T(v, i) = -sg * be3;
    T(w, i) = sg * be2;
    T(b2, i) = -sr * b1s * be3;
    T(b3, i) = sr * b1s * be2;

    Tinv(i, v) = -0.5 * sg * be3;
    Tinv(i, w) = 0.5 * sg * be2;
    Tinv(i, b2) = -0.5 * b1s * be3 / sr;
    Tinv(i, b3) = 0.5 * b1s * be2 / sr;
  }

  // a = c in the sqrt(rho) a beta_2 entries
  for (const auto& [i, sg] : {std::pair{2, 1.0}, std::pair{5, -1.0}}) {
    T(rho, i) = as * r;
    T(u, i) = -sg * as * cs;
    T(v, i) = -sg * af * cf * b1s * be2;
    T(w, i) = -sg * af * cf * b1s * be3;
    T(p, i) = as * r * s.c2;
    T(b2, i) = -af * sr * c * be2;
    T(b3, i) = -af * sr * c * be3;

    Tinv(i, u) = inv2c2 * (-sg * as * cs);
    Tinv(i, v) = inv2c2 * (-sg * af * cf * b1s * be2);
    Tinv(i, w) = inv2c2 * (-sg * af * cf * b1s * be3);
    Tinv(i, p) = inv2c2 * as / r;
    Tinv(i, b2) = -inv2c2 * af * c * be2 / sr;
    Tinv(i, b3) = -inv2c2 * af * c * be3 / sr;
  }

  T(rho, 3) = 1.0;
  Tinv(3, rho) = 1.0;
  Tinv(3, p) = -1.0 / s.c2;

  T(b1, 4) = 1.0;
  Tinv(4, b1) = 1.0;
}

}  // namespace

WaveSpeeds wave_speeds(const PrimState& V, const GasModel& gas, Direction dir) {
  const Frame f = to_frame(V, dir);
  if (!(f.rho > 0.0)) throw AdmissibilityError("density", f.rho);
  if (!(f.p >= 0.0)) throw AdmissibilityError("pressure", f.p);
  const SpeedAlgebra s = speed_algebra(f, gas.gamma());
  return {std::sqrt(s.c2), std::sqrt(s.ca2), std::sqrt(s.cf2),
          std::sqrt(s.cs2)};
}

Vec8 eigenvalues(const PrimState& V, const GasModel& gas, Direction dir) {
  const WaveSpeeds w = wave_speeds(V, gas, dir);
  const double uN = dir == Direction::x ? V.u() : V.vy();
  return lambdas_from(uN, w.cf, w.ca, w.cs);
}

Vec8 eigenvalues_cons(const ConsState& U, const GasModel& gas, Direction dir) {
  return eigenvalues(cons_to_prim(U, gas), gas, dir);
}

Mat8 quasilinear_matrix_cons(const ConsState& U, const GasModel& gas,
                             Direction dir) {
  using namespace cons_idx;
  const ConsState Ux = dir == Direction::x ? U : ConsState(swap_xy_cons(U.v));
  const PrimState V = cons_to_prim(Ux, gas);
  const double gamma = gas.gamma();
  const double g1 = 1.0 - gamma, g2 = 2.0 - gamma, g3 = 3.0 - gamma;
  const double r = V.rho(), uN = V.u(), uT = V.vy(), w = V.w();
  const double bN = V.b1(), bT = V.b2(), b3v = V.b3();
  const double uu = uN * uN + uT * uT + w * w;
  const double c2 = gamma * V.p() / r;
  const double H = (Ux.en() + V.p() + 0.5 * (bN * bN + bT * bT + b3v * b3v)) / r;

  const double a1 = -0.5 * g3 * uN * uN - 0.5 * g1 * (uT * uT + w * w);
  // d(F_E)/d(rho) of the Godunov-Powell system
  const double a2 = uN * (0.5 * (gamma - 2.0) * uu - c2 / (gamma - 1.0) -
                          (bT * bT + b3v * b3v) / r) +
                    bN * (bT * uT + b3v * w) / r;
  const double a3 = H - bN * bN / r + g1 * uN * uN;
  const double a4 = g1 * uN * uT - bN * bT / r;
  const double a5 = g1 * uN * w - bN * b3v / r;
  const double a6 = g2 * uN * bT - uT * bN;
  const double a7 = g2 * uN * b3v - w * bN;

  Mat8 C = Mat8::Zero();
  C(rho, mx) = 1.0;

  C(mx, rho) = a1;
  C(mx, mx) = g3 * uN;
  C(mx, my) = g1 * uT;
  C(mx, mz) = g1 * w;
  C(mx, b1) = g1 * bN;  // d(F_mN)/d(b_N) - q_2 = (1-gamma) b_N
  C(mx, b2) = g2 * bT;
  C(mx, b3) = g2 * b3v;
  C(mx, en) = -g1;

  C(my, rho) = -uN * uT;
  C(my, mx) = uT;
  C(my, my) = uN;
  C(my, b2) = -bN;

  C(mz, rho) = -uN * w;
  C(mz, mx) = w;
  C(mz, mz) = uN;
  C(mz, b3) = -bN;

  C(b1, b1) = uN;

  C(b2, rho) = (uT * bN - uN * bT) / r;
  C(b2, mx) = bT / r;
  C(b2, my) = -bN / r;
  C(b2, b2) = uN;

  C(b3, rho) = (w * bN - uN * b3v) / r;
  C(b3, mx) = b3v / r;
  C(b3, mz) = -bN / r;
  C(b3, b3) = uN;

  C(en, rho) = a2;
  C(en, mx) = a3;
  C(en, my) = a4;
  C(en, mz) = a5;
  C(en, b1) = g1 * bN * uN;
  C(en, b2) = a6;
  C(en, b3) = a7;
  C(en, en) = gamma * uN;

  if (dir == Direction::y) {
    swap_rows(C, mx, my);
    swap_rows(C, b1, b2);
    swap_cols(C, mx, my);
    swap_cols(C, b1, b2);
  }
  return C;
}

Mat8 quasilinear_matrix_prim(const PrimState& V, const GasModel& gas,
                             Direction dir) {
  using namespace prim_idx;
  const PrimState Vx = dir == Direction::x ? V : PrimState(swap_xy_prim(V.v));
  const double r = Vx.rho(), uN = Vx.u();
  Mat8 D = Mat8::Identity() * uN;
  D(rho, u) = r;
  D(u, p) = 1.0 / r;
  D(u, b2) = Vx.b2() / r;
  D(u, b3) = Vx.b3() / r;
  D(v, b2) = -Vx.b1() / r;
  D(w, b3) = -Vx.b1() / r;
  D(p, u) = gas.gamma() * Vx.p();
  D(b2, u) = Vx.b2();
  D(b2, v) = -Vx.b1();
  D(b3, u) = Vx.b3();
  D(b3, w) = -Vx.b1();
  if (dir == Direction::y) {
    swap_rows(D, u, v);
    swap_rows(D, b1, b2);
    swap_cols(D, u, v);
    swap_cols(D, b1, b2);
  }
  return D;
}

EigenCoefficients cons_eigen_coefficients(const PrimState& V,
                                          const GasModel& gas, Direction dir) {
  const Frame f = to_frame(V, dir);
  require_positive(f);
  return cons_coefficients(f, speed_algebra(f, gas.gamma()));
}

EigenCoefficients prim_eigen_coefficients(const PrimState& V,
                                          const GasModel& gas, Direction dir) {
  const Frame f = to_frame(V, dir);
  require_positive(f);
  return prim_coefficients(f, speed_algebra(f, gas.gamma()));
}

EigenSystem eigensystem_cons(const PrimState& V, const GasModel& gas,
                             Direction dir) {
  const Frame f = to_frame(V, dir);
  require_positive(f);
  EigenSystem es;
  es.direction = dir;
  build_cons_x(f, gas.gamma(), es.right, es.left);
  const WaveSpeeds ws = wave_speeds(V, gas, dir);
  es.lambdas = lambdas_from(f.uN, ws.cf, ws.ca, ws.cs);
  if (dir == Direction::y) {
    swap_rows(es.right, cons_idx::mx, cons_idx::my);
    swap_rows(es.right, cons_idx::b1, cons_idx::b2);
    swap_cols(es.left, cons_idx::mx, cons_idx::my);
    swap_cols(es.left, cons_idx::b1, cons_idx::b2);
  }
  return es;
}

EigenSystem eigensystem_cons(const ConsState& U, const GasModel& gas,
                             Direction dir) {
  return eigensystem_cons(cons_to_prim(U, gas), gas, dir);
}

PrimEigenSystem eigensystem_prim(const PrimState& V, const GasModel& gas,
                                 Direction dir) {
  const Frame f = to_frame(V, dir);
  require_positive(f);
  PrimEigenSystem es;
  es.direction = dir;
  build_prim_x(f, gas.gamma(), es.transform, es.inverse_transform);
  const WaveSpeeds ws = wave_speeds(V, gas, dir);
  es.lambdas = lambdas_from(f.uN, ws.cf, ws.ca, ws.cs);
  if (dir == Direction::y) {
    swap_rows(es.transform, prim_idx::u, prim_idx::v);
    swap_rows(es.transform, prim_idx::b1, prim_idx::b2);
    swap_cols(es.inverse_transform, prim_idx::u, prim_idx::v);
    swap_cols(es.inverse_transform, prim_idx::b1, prim_idx::b2);
  }
  return es;
}

}  // namespace lcdmhd
