#include "ncg/search.hpp"

#include <cmath>
#include <numbers>

#include "ncg/eig.hpp"
#include "ncg/kernels.hpp"

namespace ncg {

bool better(const BasisScore& a, const BasisScore& b) {
  if (a.primary != b.primary) return a.primary < b.primary;
  return a.slack < b.slack - 1e-12 * std::max(1.0, std::abs(b.slack));
}

namespace {

constexpr double kAngles[] = {std::numbers::pi / 4, std::numbers::pi / 8, std::numbers::pi / 16,
                              std::numbers::pi / 64};
constexpr double kShears[] = {0.5, 0.2, 0.05};
constexpr double kPhases[] = {0.0, std::numbers::pi / 2};

Candidate evaluate(const RelationOracle& oracle, const ScoreFn& score, std::vector<Vector> basis,
                   std::size_t origin) {
  Candidate c;
  c.graphs = oracle.derive(basis);
  c.score = score(c.graphs);
  c.basis = std::move(basis);
  c.origin = origin;
  return c;
}

bool try_move(const RelationOracle& oracle, const ScoreFn& score, Candidate& current, std::size_t p, std::size_t q,
              double amount, double phase, MoveKind moves) {
  std::vector<Vector> trial = current.basis;
  const cplx e = std::polar(1.0, phase);
  const std::size_t n = trial[p].size();
  if (moves == MoveKind::givens) {
    const double c = std::cos(amount), s = std::sin(amount);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vp = current.basis[p][i], vq = current.basis[q][i];
      trial[p][i] = c * vp + e * s * vq;
      trial[q][i] = -std::conj(e) * s * vp + c * vq;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) trial[p][i] += amount * e * current.basis[q][i];
    trial[p] = normalized(trial[p]);
    if (normalized_abs_det(trial) < 1e-8) return false;
  }
  auto next = evaluate(oracle, score, std::move(trial), current.origin);
  if (!better(next.score, current.score)) return false;
  current = std::move(next);
  return true;
}

}  // namespace

Candidate refine(const RelationOracle& oracle, const ScoreFn& score, std::vector<Vector> start, int sweeps,
                 MoveKind moves, std::size_t origin) {
  Candidate current = evaluate(oracle, score, std::move(start), origin);
  const std::size_t k = current.basis.size();
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    bool improved = false;
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q) {
        if (p == q || (moves == MoveKind::givens && q < p)) continue;
        for (const double phase : kPhases) {
          if (moves == MoveKind::givens) {
            for (const double a : kAngles)
              for (const double sign : {1.0, -1.0})
                improved = try_move(oracle, score, current, p, q, sign * a, phase, moves) || improved;
          } else {
            for (const double a : kShears)
              for (const double sign : {1.0, -1.0})
                improved = try_move(oracle, score, current, p, q, sign * a, phase, moves) || improved;
          }
        }
      }
    if (!improved) break;
  }
  return current;
}

double diagonal_mass(std::span<const ComplexMatrix> hermitian, std::span<const Vector> basis) {
  double total = 0.0;
  for (const auto& b : hermitian)
    for (const auto& v : basis) {
      const double d = vdot(v, b * v).real();
      total += d * d;
    }
  return total;
}

std::vector<Vector> joint_diagonalize(std::span<const ComplexMatrix> hermitian, std::vector<Vector> v,
                                      int max_sweeps) {
  const std::size_t k = v.size();
  if (hermitian.empty() || k < 2) return v;
  double mass = diagonal_mass(hermitian, v);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = p + 1; q < k; ++q) {
        // diff of the two new diagonals is r.h_b with r a unit 3-vector
        // (cos 2t, sin 2t cos f, sin 2t sin f); maximize r^T (sum h h^T) r.
        double g[3][3] = {};
        for (const auto& b : hermitian) {
          const auto bp = b * v[p];
          const auto bq = b * v[q];
          const double a = vdot(v[p], bp).real();
          const double d = vdot(v[q], bq).real();
          const cplx z = vdot(v[p], bq);
          const double h[3] = {a - d, 2.0 * z.real(), -2.0 * z.imag()};
          for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) g[r][c] += h[r] * h[c];
        }
        ComplexMatrix gm(3);
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) gm(r, c) = g[r][c];
        const auto eig = hermitian_eig(gm);
        double r0 = eig.vectors[0][0].real(), r1 = eig.vectors[0][1].real(), r2 = eig.vectors[0][2].real();
        const double rn = std::sqrt(r0 * r0 + r1 * r1 + r2 * r2);
        if (rn == 0.0) continue;
        if (r0 < 0) r0 = -r0, r1 = -r1, r2 = -r2;
        r0 /= rn, r1 /= rn, r2 /= rn;
        const double theta = 0.5 * std::acos(std::min(1.0, r0));
        if (theta < 1e-15) continue;
        const double c = std::cos(theta);
        const cplx s = std::polar(std::sin(theta), std::atan2(r2, r1));
        Vector np(v[p].size()), nq(v[q].size());
        for (std::size_t i = 0; i < np.size(); ++i) {
          np[i] = c * v[p][i] + s * v[q][i];
          nq[i] = -std::conj(s) * v[p][i] + c * v[q][i];
        }
        v[p] = std::move(np);
        v[q] = std::move(nq);
      }
    const double next = diagonal_mass(hermitian, v);
    if (next - mass <= 1e-13 * std::max(1.0, mass)) break;
    mass = next;
  }
  return v;
}

namespace {

std::vector<Vector> random_start(std::size_t n, const SearchConfig& config, std::size_t index) {
  const auto u = random_unitary(n, derive_seed(config.seed, index));
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(u.column(j));
  if (!config.polish.empty()) cols = joint_diagonalize(config.polish, std::move(cols));
  return cols;
}

Candidate run_start(const RelationOracle& oracle, const ScoreFn& score, const SearchConfig& config, std::size_t i) {
  const std::size_t seeds = config.seeds.size();
  auto start = i < seeds ? config.seeds[i] : random_start(oracle.n(), config, i - seeds);
  return refine(oracle, score, std::move(start), config.sweeps, config.moves, i);
}

}  // namespace

std::vector<Candidate> multistart(const RelationOracle& oracle, const ScoreFn& score, const SearchConfig& config) {
  return parallel_map(config.seeds.size() + config.starts,
                      [&](std::size_t i) { return run_start(oracle, score, config, i); });
}

std::vector<Candidate> multistart_serial(const RelationOracle& oracle, const ScoreFn& score,
                                         const SearchConfig& config) {
  return serial_map(config.seeds.size() + config.starts,
                    [&](std::size_t i) { return run_start(oracle, score, config, i); });
}

const Candidate& best_of(std::span<const Candidate> candidates) {
  if (candidates.empty()) throw InvariantError("best_of: no candidates");
  const Candidate* best = &candidates.front();
  for (const auto& c : candidates)
    if (better(c.score, best->score) || (!better(best->score, c.score) && c.origin < best->origin)) best = &c;
  return *best;
}

}  // namespace ncg
