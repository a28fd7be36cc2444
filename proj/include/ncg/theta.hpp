#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncg/linalg.hpp"
#include "ncg/subspace.hpp"

namespace ncg {

/// Certified bracket for sup{ ||I+T|| : I+T >= 0, T admissible }.
/// `lower` is attained by `witness_t`; `upper` comes from an independent bound
/// named in `upper_source`.
struct ThetaBracket {
  double lower = 1.0;
  double upper = 0.0;
  ComplexMatrix witness_t;
  std::string upper_source;
  bool exact = false;  // upper - lower <= kThetaExactWidth
  std::size_t starts_used = 0;
  // Largest decrease seen between consecutive alternating steps (should be ~0).
  double worst_decrease = 0.0;
  double width() const { return upper - lower; }
};

inline constexpr double kThetaExactWidth = 1e-6;

struct ThetaOptions {
  std::size_t budget = 50;  // random unit starts
  std::uint64_t seed = 0;
  std::optional<double> upper_hint;  // e.g. a strong chromatic upper bound
  std::string hint_source = "hint";
  bool structured_seeds = true;  // standard/Fourier bases and classical duals
};

/// theta(S) for an operator system: T ranges over Hermitian T orthogonal to S.
ThetaBracket theta_system(const MatrixSubspace& s, const ThetaOptions& options = {});
/// theta-bar(J): T ranges over Hermitian elements of J.
ThetaBracket theta_bar(const MatrixSubspace& j, const ThetaOptions& options = {});
/// The same on M_d(x).
ThetaBracket theta_d(const MatrixSubspace& x, std::size_t d, bool bar, const ThetaOptions& options = {});
/// Core routine: T ranges over the Hermitian elements of `admissible`.
ThetaBracket theta_over(const MatrixSubspace& admissible, const ThetaOptions& options);

/// Upper bound only (no lower-bound search): min over n, the hint and
/// theta(G_v) for structured bases v whose diagonals are orthogonal to the
/// admissible space.
double theta_upper_over(const MatrixSubspace& admissible, std::string* source = nullptr);

struct ThetaWitnessCheck {
  bool ok = false;
  double admissible_residual = 0.0;  // distance of T from the admissible space
  double hermitian_defect = 0.0;
  double min_eig = 0.0;              // of I + T
  double norm_gap = 0.0;             // | ||I+T|| - lower |
};

/// Re-validates a bracket witness against the admissible space at 1e-8
/// (membership), -1e-7 (PSD) and 1e-7 (norm).
ThetaWitnessCheck validate_theta_witness(const ThetaBracket& b, const MatrixSubspace& admissible);

}  // namespace ncg
