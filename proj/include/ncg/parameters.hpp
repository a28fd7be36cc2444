#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncg/graph.hpp"
#include "ncg/search.hpp"
#include "ncg/subspace.hpp"
#include "ncg/theta.hpp"

namespace ncg {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class ColouringMode {
  weak,     // v_i v_j^* orthogonal to X for i != j in a part; orthonormal basis
  strong,   // also i == j; orthonormal basis
  minimal,  // as strong, basis only linearly independent
};
std::string_view to_string(ColouringMode m);
ColouringMode colouring_mode_from_string(std::string_view s);

struct Colouring {
  std::vector<Vector> basis;
  std::vector<std::vector<std::size_t>> parts;  // 0-based indices into basis
  ColouringMode mode = ColouringMode::weak;
  std::size_t colours() const { return parts.size(); }
};

/// Groups basis indices by colour label (labels need not be contiguous).
Colouring colouring_from_labels(std::vector<Vector> basis, const std::vector<int>& label, ColouringMode mode);

struct Check {
  bool ok = false;
  double max_violation = 0.0;
  std::string reason;
};

/// Weak: v_i v_j^* orthogonal to x for i != j. Strong: also i == j.
Check is_independent_set(const MatrixSubspace& x, std::span<const Vector> family, bool strong,
                         double tolerance = tol::orth);
/// v_i v_j^* lies in x for all i != j.
Check is_clique(const MatrixSubspace& x, std::span<const Vector> family, double tolerance = tol::orth);
/// Checks the partition, the basis condition of the mode and every in-part
/// orthogonality relation at `tolerance`.
Check validate_colouring(const MatrixSubspace& x, const Colouring& c, double tolerance = tol::edge);

struct ParameterEstimate {
  std::string name;
  double lower = 0.0;
  double upper = kInf;
  bool exact = false;
  std::string method;
  std::optional<Colouring> colouring;
  std::vector<Vector> family;  // independent set (alpha) or clique (omega)
  bool marginal = false;       // some decision fell inside the guard band
};

struct EstimateOptions {
  SearchConfig search{16, 2, 0, MoveKind::givens, {}, {}};
  bool recognize = true;  // use matrix-unit recognition when it applies
  bool use_theta = true;
  ThetaOptions theta;
  // Known theta-bar lower bound of the space (skips the theta run).
  std::optional<double> theta_bar_lower;
};

ParameterEstimate alpha_estimate(const MatrixSubspace& x, const EstimateOptions& options = {});
ParameterEstimate omega_estimate(const MatrixSubspace& x, const EstimateOptions& options = {});
ParameterEstimate chi_estimate(const MatrixSubspace& x, const EstimateOptions& options = {});
ParameterEstimate strong_chi_estimate(const MatrixSubspace& x, const EstimateOptions& options = {});
ParameterEstimate chi0_estimate(const MatrixSubspace& x, const EstimateOptions& options = {});

/// Lexicographically smallest permutation sigma with |v_i[sigma(i)]| >
/// tol_entry for the normalized v_i. Retries with smaller thresholds; throws
/// InvariantError on singular input or when no perfect matching exists.
std::vector<std::size_t> support_permutation(std::span<const Vector> basis, double tol_entry = 1e-6);

/// Vertex colouring of g read off a minimal/strong colouring of J_g through
/// the support permutation: vertex sigma(i) gets the part of v_i.
std::vector<int> pull_back_colouring(const Colouring& c);

struct SandwichReport {
  std::size_t d = 1;
  std::size_t n = 0;  // ambient dimension after amplification
  ParameterEstimate alpha;
  ThetaBracket theta;
  ParameterEstimate chihat;  // of the complement of M_d(s)
  bool pass = false;
};

/// alpha_d(s) <= theta_d(s) <= chihat_d(s^perp), checked on brackets:
/// alpha.lower <= theta.upper + 1e-6 and theta.lower <= chihat.upper + 1e-6.
SandwichReport sandwich_check(const MatrixSubspace& s, std::size_t d, const EstimateOptions& options = {});

struct ChiOmegaReport {
  std::size_t n = 0;
  double chihat_upper = kInf;
  double omega_upper = kInf;
  bool bound_holds = false;  // chihat_upper * omega_upper >= n
  bool exact_known = false;
  bool exact_holds = false;  // chihat * omega >= n with exact values
};

/// chihat(J) * omega(J^perp) >= n.
ChiOmegaReport chi_omega_product_check(const MatrixSubspace& j, const EstimateOptions& options = {});

}  // namespace ncg
