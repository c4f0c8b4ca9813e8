#include "lcdmhd/numerical_flux.hpp"

#include <algorithm>

namespace lcdmhd {

Vec8 SpectralBounds::P() const {
  return lam_plus.cwiseQuotient(lam_plus - lam_minus);
}

Vec8 SpectralBounds::M() const {
  return (-lam_minus).cwiseQuotient(lam_plus - lam_minus);
}

Vec8 SpectralBounds::Q() const {
  return lam_plus.cwiseProduct(lam_minus).cwiseQuotient(lam_plus - lam_minus);
}

SpectralBounds spectral_bounds(const Vec8& lam_E, const Vec8& lam_W,
                               double eps) {
  SpectralBounds b;
  b.eps = eps;
  for (int i = 0; i < 8; ++i) {
    b.lam_plus[i] = std::max({lam_E[i], lam_W[i], eps});
    b.lam_minus[i] = std::min({lam_E[i], lam_W[i], -eps});
  }
  return b;
}

SpectralBounds spectral_bounds(const ConsState& U_E, const ConsState& U_W,
                               const GasModel& gas, Direction dir,
                               double eps) {
  return spectral_bounds(eigenvalues_cons(U_E, gas, dir),
                         eigenvalues_cons(U_W, gas, dir), eps);
}

Vec8 lcd_flux(const Vec8& K_E, const Vec8& K_W, const Vec8& U_E,
              const Vec8& U_W, const Mat8& R, const Mat8& L,
              const SpectralBounds& b) {
  // P = I - M, so the flux is K^E plus a correction that vanishes exactly
  // for coinciding data.
  const Vec8 cK = L * (K_W - K_E);
  const Vec8 cJ = L * (U_W - U_E);
  Vec8 c;
  for (int i = 0; i < 8; ++i) {
    const double lp = b.lam_plus[i], lm = b.lam_minus[i];
    c[i] = (-lm * cK[i] + lp * lm * cJ[i]) / (lp - lm);
  }
  return K_E + R * c;
}

LocalSpeeds local_speeds(const Vec8& lam_E, const Vec8& lam_W) {
  return {std::max({lam_E[7], lam_W[7], 0.0}),
          std::min({lam_E[0], lam_W[0], 0.0})};
}

LocalSpeeds local_speeds(const ConsState& U_E, const ConsState& U_W,
                         const GasModel& gas, Direction dir) {
  return local_speeds(eigenvalues_cons(U_E, gas, dir),
                      eigenvalues_cons(U_W, gas, dir));
}

Vec8 pccu_flux(const Vec8& K_E, const Vec8& K_W, const Vec8& U_E,
               const Vec8& U_W, const LocalSpeeds& s) {
  const double d = s.s_plus - s.s_minus;
  if (d < 1e-14) return 0.5 * (K_E + K_W);
  return K_E + (-s.s_minus * (K_W - K_E) + s.s_plus * s.s_minus * (U_W - U_E)) / d;
}

Vec2 cu_aux_flux(const Vec2& F_E, const Vec2& F_W, const Vec2& W_E,
                 const Vec2& W_W, const LocalSpeeds& s) {
  const double d = s.s_plus - s.s_minus;
  if (d < 1e-14) return 0.5 * (F_E + F_W);
  return F_E + (-s.s_minus * (F_W - F_E) + s.s_plus * s.s_minus * (W_W - W_E)) / d;
}

}  // namespace lcdmhd
