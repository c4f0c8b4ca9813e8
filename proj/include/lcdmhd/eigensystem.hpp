#pragma once

// Eigenstructure of the quasi-linear Godunov-Powell MHD system, in
// conservative variables (C^x, C^y) and primitive variables (D^x, D^y).
//
// Eigenvalues are ordered u_N - c_f <= u_N - c_a <= u_N - c_s <= u_N (entropy)
// = u_N (divergence) <= u_N + c_s <= u_N + c_a <= u_N + c_f. Column i of a
// right matrix pairs with row i of the matching left matrix.

#include "lcdmhd/state.hpp"

namespace lcdmhd {

struct WaveSpeeds {
  double c = 0.0;   ///< sound speed sqrt(gamma p / rho)
  double ca = 0.0;  ///< Alfven speed |b_N| / sqrt(rho)
  double cf = 0.0;  ///< fast magnetosonic speed
  double cs = 0.0;  ///< slow magnetosonic speed
};

/// b_N = b1 in x, b2 in y. Requires rho > 0 and p >= 0.
WaveSpeeds wave_speeds(const PrimState& V, const GasModel& gas, Direction dir);

Vec8 eigenvalues(const PrimState& V, const GasModel& gas, Direction dir);
Vec8 eigenvalues_cons(const ConsState& U, const GasModel& gas, Direction dir);

/// C^x or C^y in the canonical conservative ordering; equals dF/dU - Q^x
/// (resp. dG/dU - Q^y).
Mat8 quasilinear_matrix_cons(const ConsState& U, const GasModel& gas,
                             Direction dir);
/// D^x or D^y in primitive ordering.
Mat8 quasilinear_matrix_prim(const PrimState& V, const GasModel& gas,
                             Direction dir);

/// Normalization scalars shared by the eigenvector formulas.
struct EigenCoefficients {
  double beta1 = 1.0;  ///< sign(b_N), with sign(0) = +1
  double beta2 = 0.0;
  double beta3 = 0.0;
  double alpha_f = 1.0;
  double alpha_s = 0.0;
  bool degenerate = false;  ///< b_T = b_3 = 0
};

/// (alpha_f, alpha_s) as used by the conservative eigenvectors.
EigenCoefficients cons_eigen_coefficients(const PrimState& V,
                                          const GasModel& gas, Direction dir);
/// (alpha_f, alpha_s) hatted variants used by the primitive eigenvectors.
EigenCoefficients prim_eigen_coefficients(const PrimState& V,
                                          const GasModel& gas, Direction dir);

struct EigenSystem {
  Vec8 lambdas = Vec8::Zero();
  Mat8 right = Mat8::Identity();  ///< columns r_i
  Mat8 left = Mat8::Identity();   ///< rows l_i; left * right = I
  Direction direction = Direction::x;
};

struct PrimEigenSystem {
  Vec8 lambdas = Vec8::Zero();
  Mat8 transform = Mat8::Identity();          ///< T, columns are r_i
  Mat8 inverse_transform = Mat8::Identity();  ///< T^{-1}, rows are l_i
  Direction direction = Direction::x;
};

/// Requires an admissible state (rho > 0, p > 0).
EigenSystem eigensystem_cons(const ConsState& U, const GasModel& gas,
                             Direction dir);
EigenSystem eigensystem_cons(const PrimState& V, const GasModel& gas,
                             Direction dir);
PrimEigenSystem eigensystem_prim(const PrimState& V, const GasModel& gas,
                                 Direction dir);

}  // namespace lcdmhd
