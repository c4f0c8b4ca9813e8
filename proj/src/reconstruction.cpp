#include "lcdmhd/reconstruction.hpp"

#include <algorithm>
#include <sstream>

namespace lcdmhd {

void SlopeLimiterConfig::validate() const {
  if (!(theta >= 1.0 && theta <= 2.0)) {
    std::ostringstream os;
    os << "minmod parameter theta must lie in [1, 2], got " << theta;
    throw ConfigError(os.str());
  }
}

double minmod(double z1, double z2, double z3) {
  if (z1 > 0.0 && z2 > 0.0 && z3 > 0.0) return std::min({z1, z2, z3});
  if (z1 < 0.0 && z2 < 0.0 && z3 < 0.0) return std::max({z1, z2, z3});
  return 0.0;
}

Vec8 minmod(const Vec8& z1, const Vec8& z2, const Vec8& z3) {
  Vec8 r;
  for (int i = 0; i < 8; ++i) r[i] = minmod(z1[i], z2[i], z3[i]);
  return r;
}

double limited_slope(double wm, double w0, double wp, double theta, double h) {
  return minmod(theta * (wp - w0) / h, (wp - wm) / (2.0 * h),
                theta * (w0 - wm) / h);
}

Vec8 limited_slope(const Vec8& wm, const Vec8& w0, const Vec8& wp,
                   double theta, double h) {
  Vec8 r;
  for (int i = 0; i < 8; ++i)
    r[i] = limited_slope(wm[i], w0[i], wp[i], theta, h);
  return r;
}

CharacteristicSlopes characteristic_slopes(const std::array<Vec8, 4>& V,
                                           const Mat8& Tinv,
                                           const SlopeLimiterConfig& cfg,
                                           double h) {
  const Vec8 g0 = Tinv * V[0];
  const Vec8 g1 = Tinv * V[1];
  const Vec8 g2 = Tinv * V[2];
  const Vec8 g3 = Tinv * V[3];
  CharacteristicSlopes s;
  s.gamma_left = g1;
  s.gamma_right = g2;
  s.slope_left = limited_slope(g0, g1, g2, cfg.theta, h);
  s.slope_right = limited_slope(g1, g2, g3, cfg.theta, h);
  return s;
}

std::pair<Vec8, Vec8> face_values_from_slopes(const CharacteristicSlopes& s,
                                              const Mat8& T, double h) {
  const Vec8 ge = s.gamma_left + 0.5 * h * s.slope_left;
  const Vec8 gw = s.gamma_right - 0.5 * h * s.slope_right;
  return {T * ge, T * gw};
}

std::pair<Vec8, Vec8> componentwise_face_values(const std::array<Vec8, 4>& V,
                                                const SlopeLimiterConfig& cfg,
                                                double h) {
  const Vec8 sl = limited_slope(V[0], V[1], V[2], cfg.theta, h);
  const Vec8 sr = limited_slope(V[1], V[2], V[3], cfg.theta, h);
  return {V[1] + 0.5 * h * sl, V[2] - 0.5 * h * sr};
}

double correction_sigma(double avg, double hat_plus, double hat_minus,
                        double h, double deriv_avg) {
  if (deriv_avg == 0.0) return 0.0;
  const double s1 = 2.0 * (hat_plus - avg) / (h * deriv_avg);
  const double s2 = 2.0 * (avg - hat_minus) / (h * deriv_avg);
  if (s1 > 0.0 && s2 > 0.0) return std::min({1.0, s1, s2});
  return 0.0;
}

CorrectionResult divergence_correction(const CorrectionInput& in) {
  CorrectionResult r;
  r.sigma_x = correction_sigma(in.b1_avg, in.b1_east_hat, in.b1_west_hat,
                               in.dx, in.a_avg);
  r.sigma_y = correction_sigma(in.b2_avg, in.b2_north_hat, in.b2_south_hat,
                               in.dy, in.b_avg);
  r.sigma = std::min({1.0, r.sigma_x, r.sigma_y});
  r.slope_b1 = r.sigma * in.a_avg;
  r.slope_b2 = r.sigma * in.b_avg;
  r.b1_east = in.b1_avg + 0.5 * in.dx * r.slope_b1;
  r.b1_west = in.b1_avg - 0.5 * in.dx * r.slope_b1;
  r.b2_north = in.b2_avg + 0.5 * in.dy * r.slope_b2;
  r.b2_south = in.b2_avg - 0.5 * in.dy * r.slope_b2;
  return r;
}

AuxFaces reconstruct_aux(const std::vector<double>& avg,
                         const SlopeLimiterConfig& cfg, double h) {
  const int n = static_cast<int>(avg.size()) - 4;
  if (n < 1) throw ConfigError("reconstruct_aux needs two ghosts per side");
  AuxFaces f;
  f.plus.resize(n + 2);
  f.minus.resize(n + 2);
  for (int c = -1; c <= n; ++c) {
    const int s = c + 2;
    const double sl = limited_slope(avg[s - 1], avg[s], avg[s + 1], cfg.theta, h);
    f.plus[c + 1] = avg[s] + 0.5 * h * sl;
    f.minus[c + 1] = avg[s] - 0.5 * h * sl;
  }
  return f;
}

}  // namespace lcdmhd
