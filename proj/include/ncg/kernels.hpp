#pragma once

// Data-parallel kernels. Every OpenMP kernel has a serial reference twin with
// the same floating-point operation order, so results are bitwise identical
// for any thread count. Tests compare the pairs; tools/bench_kernels times them.

#include <exception>
#include <span>
#include <vector>

#include "ncg/linalg.hpp"

namespace ncg {

/// Worker cap from NCGRAPH_THREADS (0 or unset: OpenMP default).
int thread_count();

/// out[i*k + j] = sqrt(sum_b |v_i^* B_b v_j|^2) for unit vectors v, i.e. the
/// HS norm of the projection of v_i v_j^* onto span{B_b} (orthonormal B_b).
std::vector<double> pair_projection_norms(std::span<const ComplexMatrix> basis, std::span<const Vector> vecs);
std::vector<double> pair_projection_norms_serial(std::span<const ComplexMatrix> basis,
                                                 std::span<const Vector> vecs);

/// Applies f to 0..count-1, collecting results in index order. Exceptions are
/// rethrown after the loop (lowest index first).
template <class F>
auto parallel_map(std::size_t count, F&& f) -> std::vector<decltype(f(std::size_t{0}))> {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> out(count);
  std::vector<std::exception_ptr> errors(count);
  const int threads = thread_count();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (count > 1)
  for (long i = 0; i < static_cast<long>(count); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

template <class F>
auto serial_map(std::size_t count, F&& f) -> std::vector<decltype(f(std::size_t{0}))> {
  std::vector<decltype(f(std::size_t{0}))> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(f(i));
  return out;
}

}  // namespace ncg
