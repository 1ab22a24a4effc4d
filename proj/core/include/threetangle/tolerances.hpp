#pragma once

namespace tangle {

/// Numerical thresholds used throughout the library. Single authority so that
/// the same constant is never duplicated with two different values.
struct Tolerances {
  // State validation
  double hermiticity = 1e-10;      // max |M(i,j) - conj(M(j,i))| on density input
  double psd_clip = 1e-10;         // eigenvalues in [-psd_clip, 0) are clipped to 0
  double trace_slack = 1e-10;      // trace must satisfy 0 < tr <= 1 + trace_slack
  double unit_norm = 1e-10;        // pure-state normalization slack
  double unit_det = 1e-9;          // SL(2,C)/SU(2) determinant/unitarity slack
  double trace_one = 1e-8;         // "normalized input" checks

  // Eigensolver
  double eigensolver_input = 1e-8; // Hermiticity required of eigensolver input
  double jacobi_off = 1e-13;       // relative off-diagonal Frobenius target
  int jacobi_max_sweeps = 64;

  // GHZ-symmetric geometry
  double coords_physical = 1e-10;  // triangle membership slack (then snapped)
  double sym_shape = 1e-8;         // symmetric-pattern deviation allowed
  double curve_residual = 1e-13;   // intersection cross-product target
  int curve_max_iter = 200;

  // Normal form
  double marginal_floor = 1e-14;   // normalized marginal eigenvalue floor
  double trace_floor = 1e-12;      // degenerate-trajectory trace floor
  double nf_eps = 1e-9;            // marginal convergence: max_j ||2 rho_(j)/tr - I||_F

  // Error estimate
  double lambda_bracket_low = 1e-6;
  int lambda_bisect_iters = 80;
  double psd_decision = 1e-10;     // min eigenvalue >= -psd_decision counts as PSD
  double states_coincide = 1e-12;  // entrywise difference below which the
                                   // boundary extension is undefined
  // Tomography
  double pauli_value_slack = 1e-9; // |expectation| <= 1 + slack
  double tomo_psd = 1e-6;          // eigenvalues below -tomo_psd reject the record
};

inline constexpr Tolerances kTol{};

}  // namespace tangle
