#include "ncg/theta.hpp"

#include <algorithm>
#include <cmath>

#include "ncg/eig.hpp"
#include "ncg/kernels.hpp"
#include "ncg/ncgraph.hpp"
#include "ncg/relations.hpp"
#include "ncg/sdp.hpp"

namespace ncg {

namespace {

constexpr std::size_t kBatch = 8;

struct StartResult {
  double value = 1.0;
  ComplexMatrix t;
  double worst_decrease = 0.0;
};

ComplexMatrix combine(const std::vector<ComplexMatrix>& herm, const std::vector<double>& x, std::size_t n) {
  ComplexMatrix t(n);
  auto dt = t.data();
  for (std::size_t k = 0; k < herm.size(); ++k) {
    const auto dh = herm[k].data();
    for (std::size_t e = 0; e < dt.size(); ++e) dt[e] += x[k] * dh[e];
  }
  return t;
}

// Alternating maximization from the unit vector u: the SDP step maximizes
// u^*(I+T)u, the eigen step replaces u by the top eigenvector of I+T.
StartResult alternate(const std::vector<ComplexMatrix>& herm, std::size_t n, Vector u) {
  StartResult r;
  r.t = ComplexMatrix(n);
  if (herm.empty()) return r;
  SdpProblem p;
  p.m = herm.size();
  p.f0 = ComplexMatrix::identity(n);
  p.f = herm;
  p.c.resize(p.m);
  double previous = -1.0;
  for (int iter = 0; iter < 200; ++iter) {
    for (std::size_t k = 0; k < p.m; ++k) p.c[k] = vdot(u, herm[k] * u).real();
    const auto sol = solve_sdp(p);
    const auto t = combine(herm, sol.x, n);
    const auto eig = hermitian_eig(ComplexMatrix::identity(n) + t);
    const double value = eig.values.front();
    if (previous >= 0.0) r.worst_decrease = std::max(r.worst_decrease, previous - value);
    if (value > r.value || iter == 0) {
      r.value = value;
      r.t = t;
    }
    if (value - previous < 1e-9) break;
    previous = value;
    u = eig.vectors.front();
  }
  return r;
}

struct UpperBound {
  double value;
  std::string source;
  std::vector<Vector> dual_seeds;  // top vectors suggested by classical duals
};

UpperBound structured_upper(const MatrixSubspace& admissible, bool want_seeds) {
  const std::size_t n = admissible.n();
  UpperBound ub{static_cast<double>(n), "trace", {}};
  if (admissible.dim() == 0) {
    ub.value = 1.0;
    ub.source = "zero space";
    return ub;
  }
  const RelationOracle oracle(admissible);
  const std::vector<std::pair<const char*, std::vector<Vector>>> bases = {{"standard", standard_basis(n)},
                                                                          {"fourier", fourier_basis(n)}};
  for (const auto& [name, v] : bases) {
    const auto d = oracle.derive(v);
    if (d.diagonal_violations != 0 || d.marginal) continue;
    // admissible lies inside span{v_i v_j^* : i !~ j in G_v}, a unitary copy
    // of the traceless space of the complement of G_v.
    const auto ct = theta_classical_full(d.distinguishability);
    if (ct.value < ub.value) {
      ub.value = ct.value;
      ub.source = std::string("theta(G_v), ") + name + " basis";
    }
    if (want_seeds) {
      Vector u(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double w = std::sqrt(std::max(0.0, ct.certificate(i, i).real()));
        for (std::size_t a = 0; a < n; ++a) u[a] += w * v[i][a];
      }
      if (norm(u) > 0) ub.dual_seeds.push_back(normalized(u));
    }
  }
  return ub;
}

}  // namespace

double theta_upper_over(const MatrixSubspace& admissible, std::string* source) {
  auto ub = structured_upper(admissible, false);
  if (source) *source = ub.source;
  return ub.value;
}

ThetaBracket theta_over(const MatrixSubspace& admissible, const ThetaOptions& options) {
  const std::size_t n = admissible.n();
  if (admissible.kind() != SpaceKind::traceless)
    throw InvariantError("theta: admissible space must be adjoint-closed and traceless");
  ThetaBracket out;
  auto ub = options.structured_seeds ? structured_upper(admissible, true)
                                     : UpperBound{static_cast<double>(n), "trace", {}};
  if (admissible.dim() == 0) ub = {1.0, "zero space", {}};
  out.upper = ub.value;
  out.upper_source = ub.source;
  if (options.upper_hint && *options.upper_hint < out.upper) {
    out.upper = *options.upper_hint;
    out.upper_source = options.hint_source;
  }
  out.witness_t = ComplexMatrix(n);
  out.lower = 1.0;

  const auto herm = hermitian_basis(admissible);
  std::vector<Vector> starts = ub.dual_seeds;
  if (options.structured_seeds)
    for (const auto& e : standard_basis(n)) starts.push_back(e);
  const std::size_t structured = starts.size();
  for (std::size_t i = 0; i < options.budget; ++i)
    starts.push_back(random_unit_vector(n, derive_seed(options.seed, i)));

  // Batches keep the early exit deterministic for any thread count.
  std::size_t done = 0;
  while (done < starts.size() && out.lower < out.upper - 1e-7) {
    const std::size_t count = done < structured ? structured - done : std::min(kBatch, starts.size() - done);
    const auto results = parallel_map(count, [&](std::size_t i) { return alternate(herm, n, starts[done + i]); });
    for (const auto& r : results) {
      out.worst_decrease = std::max(out.worst_decrease, r.worst_decrease);
      if (r.value > out.lower) {
        out.lower = r.value;
        out.witness_t = r.t;
      }
    }
    done += count;
  }
  out.starts_used = done;
  out.exact = out.width() <= kThetaExactWidth;
  return out;
}

ThetaBracket theta_system(const MatrixSubspace& s, const ThetaOptions& options) {
  if (s.kind() != SpaceKind::system) throw InvariantError("theta: expected an operator system");
  return theta_over(perp(s), options);
}

ThetaBracket theta_bar(const MatrixSubspace& j, const ThetaOptions& options) {
  if (j.kind() != SpaceKind::traceless) throw InvariantError("theta-bar: expected a traceless space");
  return theta_over(j, options);
}

ThetaBracket theta_d(const MatrixSubspace& x, std::size_t d, bool bar, const ThetaOptions& options) {
  const auto big = amplify(x, d);
  return bar ? theta_bar(big, options) : theta_system(big, options);
}

ThetaWitnessCheck validate_theta_witness(const ThetaBracket& b, const MatrixSubspace& admissible) {
  ThetaWitnessCheck c;
  const std::size_t n = admissible.n();
  if (b.witness_t.rows() != n || b.witness_t.cols() != n) return c;
  c.admissible_residual = admissible.residual(b.witness_t);
  c.hermitian_defect = (b.witness_t - b.witness_t.adjoint()).hs_norm();
  const ComplexMatrix sym = 0.5 * (b.witness_t + b.witness_t.adjoint());
  const auto eig = hermitian_eig(ComplexMatrix::identity(n) + sym);
  c.min_eig = eig.values.back();
  c.norm_gap = std::abs(std::max(std::abs(eig.values.front()), std::abs(eig.values.back())) - b.lower);
  c.ok = c.admissible_residual <= 1e-8 && c.hermitian_defect <= 1e-8 && c.min_eig >= -1e-7 && c.norm_gap <= 1e-7;
  return c;
}

}  // namespace ncg
