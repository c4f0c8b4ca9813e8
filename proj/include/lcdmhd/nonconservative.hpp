#pragma once

// Path-conservative treatment of the Godunov-Powell terms through the global
// variables I^x, I^y: in-cell and across-interface contributions, the
// recursion along a row/column, and the global fluxes K = F - I.

#include <vector>

#include "lcdmhd/state.hpp"

namespace lcdmhd {

/// q(Ubar) * (b_plus - b_minus): b is b1 at E/W in x, b2 at N/S in y.
Vec8 cell_q(const ConsState& Ubar, double b_plus, double b_minus);

/// q((U_left + U_right)/2) times the jump of b_N across the interface.
/// U_left is the E (N) face of the left (lower) cell.
Vec8 interface_q(const ConsState& U_left, const ConsState& U_right,
                 Direction dir);

/// I^- and I^+ at the n+1 interfaces of one row (or column).
struct GlobalIntegrals {
  std::vector<Vec8> minus;
  std::vector<Vec8> plus;
};

/// cell_terms has n entries, interface_terms n+1. Anchored at I^-_0 = 0.
GlobalIntegrals integrate_globals_row(const std::vector<Vec8>& cell_terms,
                                      const std::vector<Vec8>& interface_terms);

/// One-sided global fluxes of cell c (0-based, may be -1 or n for the
/// outside neighbours at the row ends): K^E = F(U^E) - I^-_{c+1},
/// K^W = F(U^W) - I^+_c.
Vec8 global_flux_east(const Vec8& F_east, const GlobalIntegrals& I, int c);
Vec8 global_flux_west(const Vec8& F_west, const GlobalIntegrals& I, int c);

}  // namespace lcdmhd
