#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>

#include "lcdmhd/numerical_flux.hpp"
#include "oracles.hpp"

using namespace lcdmhd;

namespace {

const GasModel gas(5.0 / 3.0);

struct Pair {
  Vec8 UE, UW, KE, KW;
  EigenSystem sys;
};

Pair random_pair(oracle::StateGenerator& gen, Direction d) {
  Pair p;
  p.UE = oracle::cons(gen.admissible(), gas.gamma());
  p.UW = oracle::cons(gen.admissible(), gas.gamma());
  p.KE = flux(ConsState(p.UE), gas, d);
  p.KW = flux(ConsState(p.UW), gas, d);
  p.sys = eigensystem_cons(ConsState(0.5 * (p.UE + p.UW)), gas, d);
  return p;
}

double scale(const Vec8& a) { return std::max(1.0, a.cwiseAbs().maxCoeff()); }

}  // namespace

TEST_CASE("spectral bounds") {
  // identical static states: the entropy wave has lambda = 0
  const ConsState U = prim_to_cons(PrimState(1, 0, 0, 0, 1, 0.5, 0.2, 0.1), gas);
  const SpectralBounds b = spectral_bounds(U, U, gas, Direction::x, 1e-8);
  CHECK(b.lam_plus[3] == 1e-8);
  CHECK(b.lam_minus[3] == -1e-8);

  // supersonic flow to the right
  const ConsState S = prim_to_cons(PrimState(1, 20, 0, 0, 1, 0.5, 0.2, 0.1), gas);
  const SpectralBounds bs = spectral_bounds(S, S, gas, Direction::x);
  for (int i = 0; i < 8; ++i) CHECK(bs.lam_minus[i] == -default_eps);

  oracle::StateGenerator gen(40);
  for (int n = 0; n < 2000; ++n) {
    for (Direction d : {Direction::x, Direction::y}) {
      const Pair p = random_pair(gen, d);
      const SpectralBounds sb = spectral_bounds(ConsState(p.UE), ConsState(p.UW), gas, d);
      const LocalSpeeds ls = local_speeds(ConsState(p.UE), ConsState(p.UW), gas, d);
      const Vec8 P = sb.P(), M = sb.M(), Q = sb.Q();
      for (int i = 0; i < 8; ++i) {
        CHECK(sb.lam_plus[i] >= sb.eps);
        CHECK(sb.lam_minus[i] <= -sb.eps);
        CHECK(std::abs(P[i] + M[i] - 1.0) < 1e-15);
        CHECK(Q[i] <= 0.0);
      }
      CHECK(sb.lam_minus[0] >= ls.s_minus - sb.eps);
      CHECK(sb.lam_plus[7] <= ls.s_plus + sb.eps);
    }
  }
}

TEST_CASE("local speeds") {
  const ConsState U = prim_to_cons(PrimState(1, 0, 0, 0, 1, 0.5, 0.2, 0.1), gas);
  const WaveSpeeds w = wave_speeds(cons_to_prim(U, gas), gas, Direction::x);
  const LocalSpeeds s = local_speeds(U, U, gas, Direction::x);
  CHECK(s.s_plus == doctest::Approx(w.cf));
  CHECK(s.s_minus == doctest::Approx(-w.cf));

  const ConsState S = prim_to_cons(PrimState(1, 20, 0, 0, 1, 0.5, 0.2, 0.1), gas);
  CHECK(local_speeds(S, S, gas, Direction::x).s_minus == 0.0);

  oracle::StateGenerator gen(41);
  for (int n = 0; n < 1000; ++n) {
    const Pair p = random_pair(gen, Direction::y);
    const LocalSpeeds ls = local_speeds(ConsState(p.UE), ConsState(p.UW), gas, Direction::y);
    CHECK(ls.s_plus - ls.s_minus > 0.0);
    CHECK(ls.s_plus >= 0.0);
    CHECK(ls.s_minus <= 0.0);
  }
}

TEST_CASE("LCD flux: consistency and anchor shift") {
  oracle::StateGenerator gen(42);
  for (int n = 0; n < 1000; ++n) {
    for (Direction d : {Direction::x, Direction::y}) {
      const Pair p = random_pair(gen, d);
      const SpectralBounds b = spectral_bounds(ConsState(p.UE), ConsState(p.UE), gas, d);
      const Vec8 F = lcd_flux(p.KE, p.KE, p.UE, p.UE, p.sys.right, p.sys.left, b);
      CHECK((F - p.KE).cwiseAbs().maxCoeff() <= 1e-14 * scale(p.KE));

      const SpectralBounds bb = spectral_bounds(ConsState(p.UE), ConsState(p.UW), gas, d);
      const Vec8 base = lcd_flux(p.KE, p.KW, p.UE, p.UW, p.sys.right, p.sys.left, bb);
      Vec8 C;
      for (int i = 0; i < 8; ++i) C[i] = gen.uniform(-3, 3);
      const Vec8 shifted =
          lcd_flux(p.KE + C, p.KW + C, p.UE, p.UW, p.sys.right, p.sys.left, bb);
      CHECK((shifted - base - C).cwiseAbs().maxCoeff() <= 1e-12 * scale(base));
    }
  }
}

TEST_CASE("LCD flux with uniform speeds is the HLL flux") {
  oracle::StateGenerator gen(43);
  for (int n = 0; n < 1000; ++n) {
    const Pair p = random_pair(gen, Direction::x);
    const double sp = gen.uniform(0.1, 5), sm = -gen.uniform(0.1, 5);
    SpectralBounds b;
    b.lam_plus = Vec8::Constant(sp);
    b.lam_minus = Vec8::Constant(sm);
    const Vec8 F = lcd_flux(p.KE, p.KW, p.UE, p.UW, p.sys.right, p.sys.left, b);
    const Vec8 H = oracle::hll(p.KE, p.KW, p.UE, p.UW, sp, sm);
    CHECK((F - H).cwiseAbs().maxCoeff() <= 1e-10 * scale(H));
    const Vec8 G = pccu_flux(p.KE, p.KW, p.UE, p.UW, LocalSpeeds{sp, sm});
    CHECK((G - H).cwiseAbs().maxCoeff() <= 1e-12 * scale(H));
  }
}

TEST_CASE("LCD dissipation matrix has non-positive eigenvalues") {
  oracle::StateGenerator gen(44);
  for (int n = 0; n < 500; ++n) {
    const Pair p = random_pair(gen, Direction::x);
    const SpectralBounds b = spectral_bounds(ConsState(p.UE), ConsState(p.UW), gas, Direction::x);
    const Mat8 D = p.sys.right * b.Q().asDiagonal() * p.sys.left;
    const Eigen::VectorXcd ev = Eigen::EigenSolver<Mat8>(D).eigenvalues();
    for (int i = 0; i < 8; ++i) CHECK(ev[i].real() <= 1e-12 * std::max(1.0, D.norm()));
  }
}

TEST_CASE("PCCU flux") {
  oracle::StateGenerator gen(45);
  for (int n = 0; n < 1000; ++n) {
    const Pair p = random_pair(gen, Direction::y);
    const LocalSpeeds s = local_speeds(ConsState(p.UE), ConsState(p.UE), gas, Direction::y);
    CHECK((pccu_flux(p.KE, p.KE, p.UE, p.UE, s) - p.KE).cwiseAbs().maxCoeff() <=
          1e-14 * scale(p.KE));

    // scalar dissipation dominates every wave's own coefficient
    const SpectralBounds b = spectral_bounds(ConsState(p.UE), ConsState(p.UW), gas, Direction::y);
    const LocalSpeeds ls = local_speeds(ConsState(p.UE), ConsState(p.UW), gas, Direction::y);
    const double sp = std::max(ls.s_plus, b.eps), sm = std::min(ls.s_minus, -b.eps);
    const double qs = sp * sm / (sp - sm);
    const Vec8 Q = b.Q();
    for (int i = 0; i < 8; ++i) CHECK(-qs >= -Q[i] * (1 - 1e-14));
  }
  // degenerate guard
  const Vec8 K1 = Vec8::Constant(1.0), K2 = Vec8::Constant(3.0);
  CHECK(pccu_flux(K1, K2, K1, K2, LocalSpeeds{0.0, 0.0}) == Vec8::Constant(2.0));
}

TEST_CASE("CU flux for the divergence variables") {
  const Vec2 FE(0.3, -0.7), FW(1.1, 0.4), WE(0.2, -0.2), WW(-0.5, 0.5);
  CHECK((cu_aux_flux(FE, FE, WE, WE, LocalSpeeds{2.0, -1.0}) - FE).norm() < 1e-15);

  const double s = 1.7;
  const Vec2 central = 0.5 * (FE + FW) - 0.5 * s * (WW - WE);
  CHECK((cu_aux_flux(FE, FW, WE, WW, LocalSpeeds{s, -s}) - central).norm() < 1e-14);

  // A + B = 0 on both sides with a common velocity: zero total flux
  const PrimState V(1, 0.8, -0.4, 0, 1, 0.3, 0.2, 0);
  const Vec2 aE(0.6, -0.6), aW(-0.1, 0.1);
  const Vec2 gE = aux_flux_x(V, AugPair{aE[0], aE[1]}, 0.37);
  const Vec2 gW = aux_flux_x(V, AugPair{aW[0], aW[1]}, -0.2);
  CHECK(std::abs(cu_aux_flux(gE, gW, aE, aW, LocalSpeeds{1.3, -0.4}).sum()) < 1e-15);

  CHECK(cu_aux_flux(FE, FW, WE, WW, LocalSpeeds{0.0, 0.0}) == 0.5 * (FE + FW));
}
