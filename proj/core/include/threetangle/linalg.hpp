#pragma once

#include <array>
#include <complex>
#include <vector>

#include "threetangle/errors.hpp"
#include "threetangle/tolerances.hpp"

namespace tangle {

using cplx = std::complex<double>;

/// Dense complex matrix with capacity 8x8. Everything in this library lives
/// in the three-qubit Hilbert space, so sizes are 2, 4 or 8; the fixed
/// capacity keeps all operations allocation-free.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols);

  static Mat identity(int n);
  static Mat zero(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
  const cplx& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i * cols_ + j)];
  }

  Mat adjoint() const;
  cplx trace() const;
  double frob_norm() const;
  double max_abs() const;
  /// max |M(i,j) - conj(M(j,i))|
  double hermiticity_defect() const;
  bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }
  /// (M + M^dagger)/2; a no-op (bitwise) on exactly Hermitian input.
  Mat hermitian_part() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(cplx s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, cplx s) { return a *= s; }
  friend Mat operator*(cplx s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::array<cplx, 64> a_{};
};

// Pauli matrices and friends.
Mat pauli_i();
Mat pauli_x();
Mat pauli_y();
Mat pauli_z();

/// a (x) b in the ordering where the left factor owns the most significant bits.
Mat kron(const Mat& a, const Mat& b);

/// Three-qubit product operator; basis index j = 4 j1 + 2 j2 + j3 with qubit 1
/// most significant.
Mat kron3(const Mat& a, const Mat& b, const Mat& c);

/// Reduced 2x2 matrix of qubit `keep` (1..3) of an 8x8 operator. The trace of
/// the result equals the trace of the input.
Mat partial_trace(const Mat& rho, int keep);

struct Eigensystem {
  std::vector<double> values;  // ascending
  Mat vectors;                 // orthonormal columns, vectors.col(k) <-> values[k]
};

/// Hermitian eigensystem by cyclic complex Jacobi rotations. Deterministic,
/// no external dependencies; converges quadratically for the sizes used here.
Eigensystem herm_eigensystem(const Mat& m);

/// m^{-1/2} of a 2x2 Hermitian positive-definite matrix via eigendecomposition.
/// Throws NearSingularMarginal if an eigenvalue is at or below 1e-14.
Mat inv_sqrt_2x2(const Mat& m);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Mat& m);

/// 8x8 Hermitian PSD operator with trace in (0, 1]. Validating constructor;
/// eigenvalues in [-1e-10, 0) are clipped to zero, anything more negative is
/// rejected. Sub-normalized states (trace < 1) are allowed.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Mat& m);

  /// Wrap a matrix that is PSD/Hermitian by construction (twirl images,
  /// unitary conjugations, filter steps). No validation.
  static DensityMatrix trusted(Mat m);

  const Mat& mat() const { return m_; }
  const cplx& operator()(int i, int j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }

 private:
  struct TrustedTag {};
  DensityMatrix(Mat m, TrustedTag) : m_(std::move(m)) {}
  Mat m_;
};

/// 8 complex amplitudes with unit norm.
class PureState {
 public:
  explicit PureState(const std::array<cplx, 8>& amp);

  const std::array<cplx, 8>& amp() const { return amp_; }
  const cplx& operator[](int j) const { return amp_[static_cast<size_t>(j)]; }
  /// Component psi_{jkl}.
  const cplx& at(int j, int k, int l) const {
    return amp_[static_cast<size_t>(4 * j + 2 * k + l)];
  }

  DensityMatrix projector() const;

 private:
  std::array<cplx, 8> amp_{};
};

/// Triple of unit-determinant single-qubit operators: SL(2,C) filters in
/// general, SU(2) rotations when each factor is also unitary.
class LocalOperator {
 public:
  LocalOperator(const Mat& a1, const Mat& a2, const Mat& a3);

  static LocalOperator identity();

  const Mat& a1() const { return a1_; }
  const Mat& a2() const { return a2_; }
  const Mat& a3() const { return a3_; }
  const Mat& factor(int j) const;  // j in 1..3

  Mat kron() const { return tangle::kron3(a1_, a2_, a3_); }
  Mat apply(const Mat& rho) const;  // A rho A^dagger
  bool is_unitary(double tol) const;

 private:
  Mat a1_, a2_, a3_;
};

}  // namespace tangle
