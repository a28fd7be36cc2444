#include "ncg/kernels.hpp"

#include <omp.h>

#include <cmath>
#include <cstdlib>

namespace ncg {

int thread_count() {
  if (const char* env = std::getenv("NCGRAPH_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return omp_get_max_threads();
}

namespace {

// |v_i^* B v_j|^2 for all (i,j), written into out (k*k).
void accumulate_one(const ComplexMatrix& b, std::span<const Vector> vecs, std::vector<double>& out) {
  const std::size_t n = b.rows();
  const std::size_t k = vecs.size();
  std::vector<Vector> bv(k, Vector(n));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t r = 0; r < n; ++r) {
      cplx s = 0.0;
      for (std::size_t c = 0; c < n; ++c) s += b(r, c) * vecs[j][c];
      bv[j][r] = s;
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      cplx s = 0.0;
      for (std::size_t r = 0; r < n; ++r) s += std::conj(vecs[i][r]) * bv[j][r];
      out[i * k + j] = std::norm(s);
    }
}

void check_shapes(std::span<const ComplexMatrix> basis, std::span<const Vector> vecs) {
  for (const auto& v : vecs)
    for (const auto& b : basis)
      if (b.rows() != v.size() || b.cols() != v.size()) throw DimensionError("pair_projection_norms: shape mismatch");
}

}  // namespace

std::vector<double> pair_projection_norms_serial(std::span<const ComplexMatrix> basis,
                                                 std::span<const Vector> vecs) {
  check_shapes(basis, vecs);
  const std::size_t k = vecs.size();
  std::vector<double> acc(k * k, 0.0), one(k * k);
  for (const auto& b : basis) {
    accumulate_one(b, vecs, one);
    for (std::size_t e = 0; e < acc.size(); ++e) acc[e] += one[e];
  }
  for (auto& a : acc) a = std::sqrt(a);
  return acc;
}

std::vector<double> pair_projection_norms(std::span<const ComplexMatrix> basis, std::span<const Vector> vecs) {
  check_shapes(basis, vecs);
  const std::size_t k = vecs.size();
  const std::size_t m = basis.size();
  std::vector<std::vector<double>> parts(m, std::vector<double>(k * k));
  const int threads = thread_count();
#pragma omp parallel for schedule(static) num_threads(threads) if (m > 8 && !omp_in_parallel())
  for (long b = 0; b < static_cast<long>(m); ++b)
    accumulate_one(basis[static_cast<std::size_t>(b)], vecs, parts[static_cast<std::size_t>(b)]);
  // Reduction in basis order keeps the result identical to the serial twin.
  std::vector<double> acc(k * k, 0.0);
  for (const auto& p : parts)
    for (std::size_t e = 0; e < acc.size(); ++e) acc[e] += p[e];
  for (auto& a : acc) a = std::sqrt(a);
  return acc;
}

}  // namespace ncg
