#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ncg/error.hpp"

namespace ncg {

using cplx = std::complex<double>;
using Vector = std::vector<cplx>;

// Numerical tolerances shared by every module. Ambient dimensions are small
// (n <= ~16), so absolute thresholds in double precision are adequate.
namespace tol {
inline constexpr double orth = 1e-9;
inline constexpr double rank = 1e-9;
inline constexpr double herm = 1e-10;
inline constexpr double eig = 1e-10;
// Derived-graph edge decisions use a looser threshold with a guard band.
inline constexpr double edge = 1e-7;
}  // namespace tol

/// Dense row-major complex matrix. Square in almost every use; Kraus
/// operators and isometries are the rectangular exceptions.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : ComplexMatrix(n, n) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);

  static ComplexMatrix identity(std::size_t n);
  // E_{i,j}, 0-based.
  static ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  static ComplexMatrix diagonal(std::span<const double> d);
  // x y^*
  static ComplexMatrix outer(std::span<const cplx> x, std::span<const cplx> y);
  // Columns given as vectors.
  static ComplexMatrix from_columns(std::span<const Vector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  // Dimension of a square matrix.
  std::size_t n() const { return rows_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

  Vector column(std::size_t j) const;
  ComplexMatrix adjoint() const;
  cplx trace() const;
  double hs_norm() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
Vector operator*(const ComplexMatrix& a, std::span<const cplx> x);

/// Hilbert-Schmidt inner product <a, b> = tr(b^* a); linear in `a`.
cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product. Index pair (i,k),(j,l) maps to row i*m+k, column j*m+l
/// where m is the row (column) count of `b`.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
Vector kron(std::span<const cplx> a, std::span<const cplx> b);

cplx vdot(std::span<const cplx> x, std::span<const cplx> y);  // x^* y
double norm(std::span<const cplx> x);
Vector normalized(std::span<const cplx> x);

bool is_hermitian(const ComplexMatrix& a, double tolerance = tol::herm);
// ||a^* a - I||_HS
double isometry_defect(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the R
/// diagonal made positive. Deterministic given `seed`.
ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed);
/// Uniform point on the complex unit sphere.
Vector random_unit_vector(std::size_t n, std::uint64_t seed);

/// Columns v_k = (1, z^k, z^{2k}, ...)/sqrt(n), z = exp(2 pi i / n).
std::vector<Vector> fourier_basis(std::size_t n);
std::vector<Vector> standard_basis(std::size_t n);

/// |det| of the matrix whose columns are the normalized inputs (partial
/// pivoting LU). Zero vectors give 0.
double normalized_abs_det(std::span<const Vector> vecs);

// Real symmetric positive definite solve via Cholesky; returns false when the
// matrix is not numerically positive definite.
bool cholesky_solve(std::vector<double> a, std::size_t m, std::vector<double>& rhs);

// Complex Hermitian Cholesky a = L L^*; L is lower triangular. Returns false
// when a pivot is not strictly positive.
bool cholesky(const ComplexMatrix& a, ComplexMatrix& lower);

// splitmix64 mixing of (seed, stream) into an independent sub-seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace ncg
