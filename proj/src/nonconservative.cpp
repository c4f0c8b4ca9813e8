#include "lcdmhd/nonconservative.hpp"

namespace lcdmhd {

Vec8 cell_q(const ConsState& Ubar, double b_plus, double b_minus) {
  return godunov_powell_q(Ubar) * (b_plus - b_minus);
}

Vec8 interface_q(const ConsState& U_left, const ConsState& U_right,
                 Direction dir) {
  const int slot = dir == Direction::x ? cons_idx::b1 : cons_idx::b2;
  const ConsState mid(0.5 * (U_left.v + U_right.v));
  return godunov_powell_q(mid) * (U_right.v[slot] - U_left.v[slot]);
}

GlobalIntegrals integrate_globals_row(const std::vector<Vec8>& cell_terms,
                                      const std::vector<Vec8>& interface_terms) {
  const std::size_t n = cell_terms.size();
  if (interface_terms.size() != n + 1)
    throw ConfigError("integrate_globals_row: need n+1 interface terms");
  GlobalIntegrals I;
  I.minus.resize(n + 1);
  I.plus.resize(n + 1);
  I.minus[0].setZero();
  I.plus[0] = interface_terms[0];
  for (std::size_t j = 0; j < n; ++j) {
    I.minus[j + 1] = I.plus[j] + cell_terms[j];
    I.plus[j + 1] = I.minus[j + 1] + interface_terms[j + 1];
  }
  return I;
}

Vec8 global_flux_east(const Vec8& F_east, const GlobalIntegrals& I, int c) {
  return F_east - I.minus[c + 1];
}

Vec8 global_flux_west(const Vec8& F_west, const GlobalIntegrals& I, int c) {
  return F_west - I.plus[c];
}

}  // namespace lcdmhd
