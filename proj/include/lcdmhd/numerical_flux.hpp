#pragma once

// Interface fluxes: the characteristic-wise (LCD) global flux, the scalar
// central-upwind flux of the baseline scheme, and the CU flux for (A, B).

#include "lcdmhd/eigensystem.hpp"

namespace lcdmhd {

inline constexpr double default_eps = 1e-8;

struct SpectralBounds {
  Vec8 lam_plus = Vec8::Zero();
  Vec8 lam_minus = Vec8::Zero();
  double eps = default_eps;

  Vec8 P() const;
  Vec8 M() const;
  /// lam+ lam- / (lam+ - lam-), always <= 0
  Vec8 Q() const;
};

/// lam_E, lam_W: ascending eigenvalues at the two face states.
SpectralBounds spectral_bounds(const Vec8& lam_E, const Vec8& lam_W,
                               double eps = default_eps);
SpectralBounds spectral_bounds(const ConsState& U_E, const ConsState& U_W,
                               const GasModel& gas, Direction dir,
                               double eps = default_eps);

/// R (P L K^E + M L K^W + Q L (U^W - U^E)), R and L from the interface
/// average state.
Vec8 lcd_flux(const Vec8& K_E, const Vec8& K_W, const Vec8& U_E,
              const Vec8& U_W, const Mat8& R, const Mat8& L,
              const SpectralBounds& b);

struct LocalSpeeds {
  double s_plus = 0.0;
  double s_minus = 0.0;
};

LocalSpeeds local_speeds(const Vec8& lam_E, const Vec8& lam_W);
LocalSpeeds local_speeds(const ConsState& U_E, const ConsState& U_W,
                         const GasModel& gas, Direction dir);

/// (s+ K^E - s- K^W + s+ s- (U^W - U^E)) / (s+ - s-)
Vec8 pccu_flux(const Vec8& K_E, const Vec8& K_W, const Vec8& U_E,
               const Vec8& U_W, const LocalSpeeds& s);

/// CU flux of the (A, B) subsystem; falls back to the average of the two
/// physical fluxes when s+ - s- < 1e-14.
Vec2 cu_aux_flux(const Vec2& F_E, const Vec2& F_W, const Vec2& W_E,
                 const Vec2& W_W, const LocalSpeeds& s);

}  // namespace lcdmhd
