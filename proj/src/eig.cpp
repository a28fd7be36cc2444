#include "ncg/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ncg {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Zeroes a(p,q) with the unitary W = D J, where D = diag(.., conj(phase) at q, ..)
// makes the pivot real and J is the real symmetric Jacobi rotation.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cplx g = a(p, q);
  const double mag = std::abs(g);
  if (mag == 0.0) return;
  const cplx phase = g / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const cplx wpp = c;
  const cplx wpq = s;
  const cplx wqp = -s * std::conj(phase);
  const cplx wqq = c * std::conj(phase);
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {  // A <- A W
    const cplx akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * wpp + akq * wqp;
    a(k, q) = akp * wpq + akq * wqq;
  }
  for (std::size_t k = 0; k < n; ++k) {  // A <- W^* A
    const cplx apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(wpp) * apk + std::conj(wqp) * aqk;
    a(q, k) = std::conj(wpq) * apk + std::conj(wqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  for (std::size_t k = 0; k < n; ++k) {  // V <- V W
    const cplx vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * wpp + vkq * wqp;
    v(k, q) = vkp * wpq + vkq * wqq;
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& input) {
  if (!input.is_square()) throw DimensionError("hermitian_eig: matrix is not square");
  if (!is_hermitian(input, tol::herm)) throw InvariantError("hermitian_eig: input is not Hermitian");
  const std::size_t n = input.rows();

  // Symmetrize so that rounding in the input does not leak into the rotations.
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(a.hs_norm(), 1e-300);
  bool converged = n <= 1;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-14 * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > 1e-300) rotate(a, v, p, q);
  }
  if (!converged && off_diagonal_norm(a) > 1e-14 * scale)
    throw ConvergenceError("hermitian_eig: Jacobi sweeps did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
  EigenDecomposition out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (const auto k : order) {
    out.values.push_back(a(k, k).real());
    out.vectors.push_back(v.column(k));
  }
  return out;
}

double lambda_max(const ComplexMatrix& a) {
  const auto e = hermitian_eig(a);
  return e.values.empty() ? 0.0 : e.values.front();
}

double lambda_min(const ComplexMatrix& a) {
  const auto e = hermitian_eig(a);
  return e.values.empty() ? 0.0 : e.values.back();
}

}  // namespace ncg
