#include "threetangle/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace tangle {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw DimensionMismatch(msg);
}

}  // namespace

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols) {
  require(rows >= 0 && cols >= 0 && rows * cols <= 64, "matrix exceeds 8x8 capacity");
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::zero(int rows, int cols) { return Mat(rows, cols); }

Mat Mat::adjoint() const {
  Mat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

cplx Mat::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Mat::frob_norm() const {
  double s = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) s += std::norm((*this)(i, j));
  return std::sqrt(s);
}

double Mat::max_abs() const {
  double s = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) s = std::max(s, std::abs((*this)(i, j)));
  return s;
}

double Mat::hermiticity_defect() const {
  double s = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      s = std::max(s, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return s;
}

Mat Mat::hermitian_part() const {
  Mat out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      out(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  return out;
}

Mat& Mat::operator+=(const Mat& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "size mismatch in +");
  for (size_t k = 0; k < static_cast<size_t>(rows_ * cols_); ++k) a_[k] += o.a_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "size mismatch in -");
  for (size_t k = 0; k < static_cast<size_t>(rows_ * cols_); ++k) a_[k] -= o.a_[k];
  return *this;
}

Mat& Mat::operator*=(cplx s) {
  for (size_t k = 0; k < static_cast<size_t>(rows_ * cols_); ++k) a_[k] *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  require(a.cols_ == b.rows_, "size mismatch in *");
  Mat out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const cplx aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Mat pauli_i() { return Mat::identity(2); }

Mat pauli_x() {
  Mat m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Mat pauli_y() {
  Mat m(2, 2);
  m(0, 1) = cplx(0.0, -1.0);
  m(1, 0) = cplx(0.0, 1.0);
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja) {
      const cplx v = a(ia, ja);
      if (v == 0.0) continue;
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb)
          out(ia * b.rows() + ib, ja * b.cols() + jb) = v * b(ib, jb);
    }
  return out;
}

Mat kron3(const Mat& a, const Mat& b, const Mat& c) {
  require(a.rows() == 2 && a.cols() == 2 && b.rows() == 2 && b.cols() == 2 &&
              c.rows() == 2 && c.cols() == 2,
          "kron3 expects 2x2 factors");
  return kron(kron(a, b), c);
}

Mat partial_trace(const Mat& rho, int keep) {
  require(rho.rows() == 8 && rho.cols() == 8, "partial_trace expects 8x8");
  if (keep < 1 || keep > 3) throw DimensionMismatch("qubit index out of range");
  const int shift = 3 - keep;  // qubit 1 owns bit 2
  int other[2], n = 0;
  for (int s = 2; s >= 0; --s)
    if (s != shift) other[n++] = s;
  Mat out(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      cplx sum = 0.0;
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
          const int rest = (u << other[0]) | (v << other[1]);
          sum += rho((a << shift) | rest, (b << shift) | rest);
        }
      out(a, b) = sum;
    }
  return out;
}

Eigensystem herm_eigensystem(const Mat& m) {
  const int n = m.rows();
  require(n == m.cols() && n >= 1, "eigensystem expects a square matrix");
  if (m.hermiticity_defect() > kTol.eigensolver_input)
    throw InvalidState("herm_eigensystem: input is not Hermitian");

  Mat a = m.hermitian_part();
  Mat v = Mat::identity(n);
  const double scale = std::max(a.frob_norm(), 1e-300);

  auto off_norm = [&]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += std::norm(a(p, q));
    return std::sqrt(2.0 * s);
  };

  for (int sweep = 0; sweep < kTol.jacobi_max_sweeps; ++sweep) {
    if (off_norm() <= kTol.jacobi_off * scale) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double abspq = std::abs(apq);
        if (abspq <= 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Phase that makes the pivot real, then a real Jacobi rotation.
        const cplx phase = apq / abspq;
        const double tau = (aqq - app) / (2.0 * abspq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx sp = s * phase;
        // Columns: [p q] <- [p q] * [[c, sp], [-conj(sp), c]]
        for (int k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - std::conj(sp) * akq;
          a(k, q) = sp * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sp * aqk;
          a(q, k) = std::conj(sp) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cplx(a(p, p).real(), 0.0);
        a(q, q) = cplx(a(q, q).real(), 0.0);
        for (int k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - std::conj(sp) * vkq;
          v(k, q) = sp * vkp + c * vkq;
        }
      }
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  Eigensystem es;
  es.values.resize(static_cast<size_t>(n));
  es.vectors = Mat(n, n);
  for (int k = 0; k < n; ++k) {
    es.values[static_cast<size_t>(k)] = a(order[static_cast<size_t>(k)],
                                          order[static_cast<size_t>(k)]).real();
    for (int i = 0; i < n; ++i)
      es.vectors(i, k) = v(i, order[static_cast<size_t>(k)]);
  }
  return es;
}

Mat inv_sqrt_2x2(const Mat& m) {
  require(m.rows() == 2 && m.cols() == 2, "inv_sqrt_2x2 expects 2x2");
  const Eigensystem es = herm_eigensystem(m);
  if (es.values[0] <= 1e-14)
    throw NearSingularMarginal("inv_sqrt_2x2: eigenvalue " +
                               std::to_string(es.values[0]) +
                               " at or below singularity threshold");
  Mat out(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cplx sum = 0.0;
      for (int k = 0; k < 2; ++k)
        sum += es.vectors(i, k) * std::conj(es.vectors(j, k)) /
               std::sqrt(es.values[static_cast<size_t>(k)]);
      out(i, j) = sum;
    }
  return out.hermitian_part();
}

double min_eigenvalue(const Mat& m) { return herm_eigensystem(m).values[0]; }

DensityMatrix::DensityMatrix(const Mat& m) : m_(m) {
  if (m.rows() != 8 || m.cols() != 8)
    throw InvalidState("DensityMatrix: expected an 8x8 matrix");
  if (m.hermiticity_defect() > kTol.hermiticity)
    throw InvalidState("DensityMatrix: input is not Hermitian");
  m_ = m_.hermitian_part();
  Eigensystem es = herm_eigensystem(m_);
  if (es.values[0] < -kTol.psd_clip)
    throw InvalidState("DensityMatrix: negative eigenvalue " +
                       std::to_string(es.values[0]));
  if (es.values[0] < 0.0) {
    // Rebuild with the slightly negative eigenvalues clipped to zero.
    Mat rebuilt(8, 8);
    for (int k = 0; k < 8; ++k) {
      const double lam = std::max(es.values[static_cast<size_t>(k)], 0.0);
      if (lam == 0.0) continue;
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
          rebuilt(i, j) += lam * es.vectors(i, k) * std::conj(es.vectors(j, k));
    }
    m_ = rebuilt.hermitian_part();
  }
  const double tr = m_.trace().real();
  if (!(tr > 0.0))
    throw InvalidState("DensityMatrix: trace must be positive");
  if (tr > 1.0 + kTol.trace_slack)
    throw InvalidState("DensityMatrix: trace " + std::to_string(tr) +
                       " exceeds 1");
}

DensityMatrix DensityMatrix::trusted(Mat m) {
  return DensityMatrix(std::move(m), TrustedTag{});
}

PureState::PureState(const std::array<cplx, 8>& amp) : amp_(amp) {
  double n2 = 0.0;
  for (const cplx& a : amp_) n2 += std::norm(a);
  if (std::abs(n2 - 1.0) > kTol.unit_norm)
    throw InvalidState("PureState: squared norm " + std::to_string(n2) +
                       " is not 1");
}

DensityMatrix PureState::projector() const {
  Mat m(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      m(i, j) = amp_[static_cast<size_t>(i)] * std::conj(amp_[static_cast<size_t>(j)]);
  return DensityMatrix::trusted(std::move(m));
}

namespace {

cplx det2(const Mat& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

void check_sl2(const Mat& a, const char* which) {
  if (a.rows() != 2 || a.cols() != 2)
    throw DimensionMismatch("LocalOperator: factors must be 2x2");
  if (std::abs(det2(a) - 1.0) > kTol.unit_det)
    throw InvalidState(std::string("LocalOperator: ") + which +
                       " does not have unit determinant");
}

}  // namespace

LocalOperator::LocalOperator(const Mat& a1, const Mat& a2, const Mat& a3)
    : a1_(a1), a2_(a2), a3_(a3) {
  check_sl2(a1_, "a1");
  check_sl2(a2_, "a2");
  check_sl2(a3_, "a3");
}

LocalOperator LocalOperator::identity() {
  return LocalOperator(Mat::identity(2), Mat::identity(2), Mat::identity(2));
}

const Mat& LocalOperator::factor(int j) const {
  switch (j) {
    case 1: return a1_;
    case 2: return a2_;
    case 3: return a3_;
    default: throw DimensionMismatch("LocalOperator: qubit index out of range");
  }
}

Mat LocalOperator::apply(const Mat& rho) const {
  const Mat a = kron();
  return a * rho * a.adjoint();
}

bool LocalOperator::is_unitary(double tol) const {
  for (int j = 1; j <= 3; ++j) {
    const Mat& a = factor(j);
    if ((a * a.adjoint() - Mat::identity(2)).max_abs() > tol) return false;
  }
  return true;
}

}  // namespace tangle
