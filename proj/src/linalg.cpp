#include "ncg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace ncg {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    throw DimensionError("matrix data has " + std::to_string(data_.size()) +
                         " entries, expected " + std::to_string(rows_ * cols_));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw DimensionError("matrix unit index out of range");
  ComplexMatrix m(n);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> x, std::span<const cplx> y) {
  ComplexMatrix m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * std::conj(y[j]);
  return m;
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const Vector> cols) {
  if (cols.empty()) return {};
  const std::size_t r = cols[0].size();
  ComplexMatrix m(r, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != r) throw DimensionError("ragged column set");
    for (std::size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector ComplexMatrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::hs_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const ComplexMatrix& a, std::span<const cplx> x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector shape mismatch");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("hs_inner: dimension mismatch");
  // tr(b^* a) = sum_ij conj(b_ij) a_ij
  cplx s = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t k = 0; k < da.size(); ++k) s += std::conj(db[k]) * da[k];
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t br = b.rows(), bc = b.cols();
  ComplexMatrix c(a.rows() * br, a.cols() * bc);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) c(i * br + k, j * bc + l) = aij * b(k, l);
    }
  return c;
}

Vector kron(std::span<const cplx> a, std::span<const cplx> b) {
  Vector c(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) c[i * b.size() + k] = a[i] * b[k];
  return c;
}

cplx vdot(std::span<const cplx> x, std::span<const cplx> y) {
  if (x.size() != y.size()) throw DimensionError("vdot: length mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double norm(std::span<const cplx> x) {
  double s = 0.0;
  for (const auto& z : x) s += std::norm(z);
  return std::sqrt(s);
}

Vector normalized(std::span<const cplx> x) {
  const double nx = norm(x);
  if (nx == 0.0) throw InvariantError("cannot normalize a zero vector");
  Vector v(x.begin(), x.end());
  for (auto& z : v) z /= nx;
  return v;
}

bool is_hermitian(const ComplexMatrix& a, double tolerance) {
  if (!a.is_square()) return false;
  double diff = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) diff += std::norm(a(i, j) - std::conj(a(j, i)));
  const double scale = std::max(a.hs_norm(), 1.0);
  return std::sqrt(diff) <= tolerance * scale;
}

double isometry_defect(const ComplexMatrix& a) {
  return (a.adjoint() * a - ComplexMatrix::identity(a.cols())).hs_norm();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shape mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vector> cols(n, Vector(n));
  for (auto& c : cols)
    for (auto& z : c) z = cplx(gauss(rng), gauss(rng));
  // Modified Gram-Schmidt; a Ginibre matrix is full rank with probability one
  // and the positive R diagonal is implicit in normalizing each column.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      const cplx p = vdot(cols[k], cols[j]);
      for (std::size_t i = 0; i < n; ++i) cols[j][i] -= p * cols[k][i];
    }
    cols[j] = normalized(cols[j]);
  }
  return ComplexMatrix::from_columns(cols);
}

Vector random_unit_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(n);
  for (auto& z : v) z = cplx(gauss(rng), gauss(rng));
  return normalized(v);
}

std::vector<Vector> fourier_basis(std::size_t n) {
  std::vector<Vector> basis(n, Vector(n));
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((i * k) % n) / static_cast<double>(n);
      basis[k][i] = s * cplx(std::cos(angle), std::sin(angle));
    }
  return basis;
}

std::vector<Vector> standard_basis(std::size_t n) {
  std::vector<Vector> basis(n, Vector(n));
  for (std::size_t k = 0; k < n; ++k) basis[k][k] = 1.0;
  return basis;
}

double normalized_abs_det(std::span<const Vector> vecs) {
  const std::size_t n = vecs.size();
  if (n == 0) return 1.0;
  ComplexMatrix a(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (vecs[j].size() != n) throw DimensionError("determinant needs a square vector set");
    const double nj = norm(vecs[j]);
    if (nj == 0.0) return 0.0;
    for (std::size_t i = 0; i < n; ++i) a(i, j) = vecs[j][i] / nj;
  }
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (std::abs(a(piv, k)) == 0.0) return 0.0;
    if (piv != k)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
    det *= std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

bool cholesky_solve(std::vector<double> a, std::size_t m, std::vector<double>& rhs) {
  for (std::size_t j = 0; j < m; ++j) {
    double d = a[j * m + j];
    for (std::size_t k = 0; k < j; ++k) d -= a[j * m + k] * a[j * m + k];
    if (!(d > 0.0)) return false;
    d = std::sqrt(d);
    a[j * m + j] = d;
    for (std::size_t i = j + 1; i < m; ++i) {
      double s = a[i * m + j];
      for (std::size_t k = 0; k < j; ++k) s -= a[i * m + k] * a[j * m + k];
      a[i * m + j] = s / d;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    double s = rhs[i];
    for (std::size_t k = 0; k < i; ++k) s -= a[i * m + k] * rhs[k];
    rhs[i] = s / a[i * m + i];
  }
  for (std::size_t i = m; i-- > 0;) {
    double s = rhs[i];
    for (std::size_t k = i + 1; k < m; ++k) s -= a[k * m + i] * rhs[k];
    rhs[i] = s / a[i * m + i];
  }
  return true;
}

bool cholesky(const ComplexMatrix& a, ComplexMatrix& lower) {
  const std::size_t n = a.rows();
  lower = ComplexMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(lower(j, k));
    if (!(d > 0.0) || !std::isfinite(d)) return false;
    d = std::sqrt(d);
    lower(j, j) = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= lower(i, k) * std::conj(lower(j, k));
      lower(i, j) = s / d;
    }
  }
  return true;
}

}  // namespace ncg
