#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ncg/graph.hpp"
#include "ncg/linalg.hpp"

namespace ncg {

/// maximize c.x  subject to  F0 + sum_k x_k F_k >= 0, all F Hermitian.
struct SdpProblem {
  std::size_t m = 0;
  std::vector<double> c;
  ComplexMatrix f0;
  std::vector<ComplexMatrix> f;
};

enum class SdpStatus { optimal, max_iter, infeasible, unbounded };
std::string_view to_string(SdpStatus s);

struct SdpSolution {
  std::vector<double> x;
  double value = 0.0;
  double barrier_mu = 0.0;
  double min_eig = 0.0;  // smallest eigenvalue of F(x)
  double gap = 0.0;      // duality gap bound N*mu at the final centering
  SdpStatus status = SdpStatus::max_iter;
  ComplexMatrix dual;    // Z = mu F(x)^{-1}: Z >= 0, tr(F_k Z) ~ -c_k
  int newton_steps = 0;
};

struct SdpOptions {
  std::optional<std::vector<double>> start;  // must be strictly feasible if given
  double mu0 = 1.0;
  double mu_factor = 5.0;
  double gap_target = 1e-8;
  int max_newton = 2000;
};

/// Throws InvariantError on non-Hermitian data and DimensionError on shape
/// mismatches.
void validate(const SdpProblem& p);

/// Log-det barrier path following with damped Newton steps. Without a start
/// point, x = 0 is used when F0 > 0 and a phase-I problem (maximize s with
/// F(x) - sI >= 0) is solved otherwise.
SdpSolution solve_sdp(const SdpProblem& p, const SdpOptions& options = {});

struct ClassicalTheta {
  double value = 0.0;
  // Dual certificate B >= 0, tr B = 1, B_ij = 0 on edges, value ~ sum_ij B_ij.
  ComplexMatrix certificate;
  SdpSolution solution;
};

/// Lovasz theta(G) = min t s.t. tI - A >= 0, A_ii = 1, A_ij = 1 for
/// non-adjacent i != j, A_ij free on edges.
ClassicalTheta theta_classical_full(const Graph& g);
double theta_classical(const Graph& g);

}  // namespace ncg
