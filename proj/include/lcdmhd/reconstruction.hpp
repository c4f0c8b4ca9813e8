#pragma once

// Piecewise-linear point values: generalized minmod in local characteristic
// variables for V, componentwise minmod for (A, B), and the slope correction
// that makes the b1/b2 point values locally divergence free.

#include <array>
#include <utility>
#include <vector>

#include "lcdmhd/state.hpp"

namespace lcdmhd {

struct SlopeLimiterConfig {
  double theta = 1.3;

  /// Throws ConfigError unless 1 <= theta <= 2.
  void validate() const;
};

/// min if all positive, max if all negative, 0 otherwise.
double minmod(double z1, double z2, double z3);
Vec8 minmod(const Vec8& z1, const Vec8& z2, const Vec8& z3);

/// Limited slope of the middle value of (wm, w0, wp) spaced h apart.
double limited_slope(double wm, double w0, double wp, double theta, double h);
Vec8 limited_slope(const Vec8& wm, const Vec8& w0, const Vec8& wp,
                   double theta, double h);

/// Characteristic values and slopes of the two cells adjacent to one
/// interface, all taken in the single basis of that interface.
struct CharacteristicSlopes {
  Vec8 gamma_left;   ///< Gamma of cell j
  Vec8 gamma_right;  ///< Gamma of cell j+1
  Vec8 slope_left;
  Vec8 slope_right;
};

/// V holds cells j-1, j, j+1, j+2 around interface j+1/2.
CharacteristicSlopes characteristic_slopes(const std::array<Vec8, 4>& V,
                                           const Mat8& Tinv,
                                           const SlopeLimiterConfig& cfg,
                                           double h);

/// (V^E of cell j, V^W of cell j+1).
std::pair<Vec8, Vec8> face_values_from_slopes(const CharacteristicSlopes& s,
                                              const Mat8& T, double h);

/// Same as above with T = I (componentwise reconstruction of V).
std::pair<Vec8, Vec8> componentwise_face_values(const std::array<Vec8, 4>& V,
                                                const SlopeLimiterConfig& cfg,
                                                double h);

struct CorrectionInput {
  double b1_avg = 0.0, b2_avg = 0.0;
  double a_avg = 0.0, b_avg = 0.0;
  double b1_east_hat = 0.0, b1_west_hat = 0.0;
  double b2_north_hat = 0.0, b2_south_hat = 0.0;
  double dx = 1.0, dy = 1.0;
};

struct CorrectionResult {
  double sigma_x = 0.0, sigma_y = 0.0, sigma = 0.0;
  double slope_b1 = 0.0, slope_b2 = 0.0;
  double b1_east = 0.0, b1_west = 0.0;
  double b2_north = 0.0, b2_south = 0.0;
};

/// Scaling factor for one direction: min(1, s1, s2) when s1, s2 > 0 and the
/// derivative average is nonzero, else 0.
double correction_sigma(double avg, double hat_plus, double hat_minus,
                        double h, double deriv_avg);

CorrectionResult divergence_correction(const CorrectionInput& in);

/// Componentwise minmod on one row/column of averages. `avg` holds n
/// interior values plus two ghosts on each side; the result holds the east
/// (north) and west (south) point values for cells -1..n, i.e. index c+1.
struct AuxFaces {
  std::vector<double> plus;   ///< E or N values
  std::vector<double> minus;  ///< W or S values
};
AuxFaces reconstruct_aux(const std::vector<double>& avg,
                         const SlopeLimiterConfig& cfg, double h);

}  // namespace lcdmhd
