#include "ncg/parameters.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "ncg/ncgraph.hpp"
#include "ncg/relations.hpp"

namespace ncg {

std::string_view to_string(ColouringMode m) {
  switch (m) {
    case ColouringMode::weak: return "weak";
    case ColouringMode::strong: return "strong";
    case ColouringMode::minimal: return "minimal";
  }
  return "weak";
}

ColouringMode colouring_mode_from_string(std::string_view s) {
  if (s == "weak") return ColouringMode::weak;
  if (s == "strong") return ColouringMode::strong;
  if (s == "minimal") return ColouringMode::minimal;
  throw ParseError("unknown colouring mode '" + std::string(s) + "'");
}

Colouring colouring_from_labels(std::vector<Vector> basis, const std::vector<int>& label, ColouringMode mode) {
  if (label.size() != basis.size()) throw DimensionError("colouring: one label per basis vector expected");
  std::vector<int> seen;
  Colouring c;
  c.basis = std::move(basis);
  c.mode = mode;
  for (std::size_t i = 0; i < label.size(); ++i) {
    auto it = std::find(seen.begin(), seen.end(), label[i]);
    if (it == seen.end()) {
      seen.push_back(label[i]);
      c.parts.emplace_back();
      it = seen.end() - 1;
    }
    c.parts[static_cast<std::size_t>(it - seen.begin())].push_back(i);
  }
  return c;
}

namespace {

double orth_residual(const MatrixSubspace& x, const Vector& a, const Vector& b) {
  return x.projection_norm(ComplexMatrix::outer(normalized(a), normalized(b)));
}

bool contains_identity(const MatrixSubspace& x) {
  return x.n() > 0 && x.residual(ComplexMatrix::identity(x.n())) <= tol::orth;
}

std::vector<Vector> pick(const std::vector<Vector>& basis, const std::vector<std::size_t>& idx) {
  std::vector<Vector> out;
  for (const auto i : idx) out.push_back(basis[i]);
  return out;
}

int exact_or(const std::optional<int>& v, int fallback) { return v ? *v : fallback; }

// Space whose diagonal mass the joint diagonalization maximizes: for a
// traceless space the strong conditions want v_i v_i^* orthogonal to it.
std::vector<ComplexMatrix> polish_target(const MatrixSubspace& x) {
  if (x.kind() == SpaceKind::traceless) return hermitian_basis(perp(x));
  if (!x.kind_violation().empty()) return {};
  return hermitian_basis(x);
}

std::vector<Candidate> explore(const MatrixSubspace& x, const RelationOracle& oracle, const EstimateOptions& opt,
                               const ScoreFn& score, MoveKind moves = MoveKind::givens,
                               std::vector<std::vector<Vector>> extra_seeds = {}) {
  SearchConfig cfg = opt.search;
  cfg.moves = moves;
  cfg.seeds = {standard_basis(x.n()), fourier_basis(x.n())};
  for (auto& s : extra_seeds) cfg.seeds.push_back(std::move(s));
  cfg.polish = polish_target(x);
  auto pool = multistart(oracle, score, cfg);
  // Refinement may leave a seed whose relation graphs carry a useful bound.
  for (std::size_t i = 0; i < cfg.seeds.size(); ++i) {
    Candidate c;
    c.graphs = oracle.derive(cfg.seeds[i]);
    c.score = score(c.graphs);
    c.basis = std::move(cfg.seeds[i]);
    c.origin = pool.size() + i;
    pool.push_back(std::move(c));
  }
  return pool;
}

double offdiag_slack(const DerivedGraphs& d) { return d.slack; }

double alpha_theta_bound(const MatrixSubspace& x) {
  // alpha(X) = alpha(X + C I) <= theta(X + C I).
  if (!x.kind_violation().empty() || x.n() == 0) return kInf;
  std::vector<ComplexMatrix> gens = x.basis();
  gens.push_back(ComplexMatrix::identity(x.n()));
  const auto sys = span(gens, x.n(), SpaceKind::system);
  return std::floor(theta_upper_over(perp(sys)) + 1e-6);
}

void finish(ParameterEstimate& e) {
  if (e.lower > e.upper) throw InvariantError(e.name + ": lower bound exceeds upper bound");
  e.exact = e.lower == e.upper && !e.marginal;
}

std::vector<Vector> identity_family(std::size_t n, const std::vector<std::size_t>& idx) {
  return pick(standard_basis(n), idx);
}

}  // namespace

Check is_independent_set(const MatrixSubspace& x, std::span<const Vector> family, bool strong, double tolerance) {
  Check c{true, 0.0, {}};
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].size() != x.n()) throw DimensionError("independent set: vector length differs from n");
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j && !strong) continue;
      c.max_violation = std::max(c.max_violation, orth_residual(x, family[i], family[j]));
    }
  }
  if (gram_defect(std::vector<Vector>(family.begin(), family.end())) > tol::orth) {
    c.ok = false;
    c.reason = "family is not orthonormal";
    return c;
  }
  c.ok = c.max_violation <= tolerance;
  if (!c.ok) c.reason = "rank-one product not orthogonal to the space";
  return c;
}

Check is_clique(const MatrixSubspace& x, std::span<const Vector> family, double tolerance) {
  Check c{true, 0.0, {}};
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j) continue;
      const auto r = x.residual(ComplexMatrix::outer(normalized(family[i]), normalized(family[j])));
      c.max_violation = std::max(c.max_violation, r);
    }
  c.ok = c.max_violation <= tolerance;
  if (!c.ok) c.reason = "rank-one product outside the space";
  return c;
}

Check validate_colouring(const MatrixSubspace& x, const Colouring& col, double tolerance) {
  Check c{false, 0.0, {}};
  const std::size_t n = x.n();
  if (col.basis.size() != n) {
    c.reason = "basis must have n vectors";
    return c;
  }
  for (const auto& v : col.basis)
    if (v.size() != n) {
      c.reason = "vector length differs from n";
      return c;
    }
  std::vector<int> count(n, 0);
  for (const auto& part : col.parts) {
    if (part.empty()) {
      c.reason = "empty part";
      return c;
    }
    for (const auto i : part) {
      if (i >= n) {
        c.reason = "part index out of range";
        return c;
      }
      ++count[i];
    }
  }
  if (std::any_of(count.begin(), count.end(), [](int k) { return k != 1; })) {
    c.reason = "parts do not partition the basis";
    return c;
  }
  if (col.mode == ColouringMode::minimal) {
    if (normalized_abs_det(col.basis) < 1e-8) {
      c.reason = "basis is not linearly independent";
      return c;
    }
  } else if (gram_defect(col.basis) > tol::orth) {
    c.reason = "basis is not orthonormal";
    return c;
  }
  const bool diag = col.mode != ColouringMode::weak;
  for (const auto& part : col.parts)
    for (const auto i : part)
      for (const auto j : part) {
        if (i == j && !diag) continue;
        c.max_violation = std::max(c.max_violation, orth_residual(x, col.basis[i], col.basis[j]));
      }
  c.ok = c.max_violation <= tolerance;
  if (!c.ok) c.reason = "in-part product not orthogonal to the space";
  return c;
}

ParameterEstimate alpha_estimate(const MatrixSubspace& x, const EstimateOptions& opt) {
  ParameterEstimate e;
  e.name = "alpha";
  const std::size_t n = x.n();
  const RelationOracle oracle(x);
  if (opt.recognize && oracle.recognition()) {
    // J_G <= X <= S_G and both ends have alpha = alpha(G).
    const auto r = alpha_exact(oracle.recognition()->graph);
    if (r.value) {
      e.lower = e.upper = *r.value;
      e.family = identity_family(n, r.vertices);
      e.method = "matrix-unit recognition";
      finish(e);
      return e;
    }
  }
  const ScoreFn score = [](const DerivedGraphs& d) {
    return BasisScore{-static_cast<long>(exact_or(alpha_exact(complement(d.distinguishability)).value, 1)),
                      offdiag_slack(d)};
  };
  const auto pool = explore(x, oracle, opt, score);
  e.lower = 1;
  e.family = {standard_basis(n).front()};
  e.upper = static_cast<double>(n);
  for (const auto& c : pool) {
    const auto lo = alpha_exact(complement(c.graphs.distinguishability));
    if (lo.value && *lo.value > e.lower) {
      e.lower = *lo.value;
      e.family = pick(c.basis, lo.vertices);
      e.marginal = c.graphs.marginal;
    }
    // X contains a unitary copy of J_{H_v}.
    const auto hi = alpha_exact(c.graphs.confusability);
    if (hi.value) e.upper = std::min(e.upper, static_cast<double>(*hi.value));
  }
  e.method = "basis search (" + std::to_string(pool.size()) + " starts)";
  if (opt.use_theta) {
    const double t = alpha_theta_bound(x);
    if (t < e.upper) {
      e.upper = t;
      e.method += ", theta upper bound";
    }
  }
  finish(e);
  return e;
}

ParameterEstimate omega_estimate(const MatrixSubspace& x, const EstimateOptions& opt) {
  auto e = alpha_estimate(perp(x), opt);
  e.name = "omega";
  e.method = "independence of the complement: " + e.method;
  return e;
}

ParameterEstimate chi_estimate(const MatrixSubspace& x, const EstimateOptions& opt) {
  ParameterEstimate e;
  e.name = "chi";
  const std::size_t n = x.n();
  const RelationOracle oracle(x);
  if (opt.recognize && oracle.recognition()) {
    const auto r = chi_exact(oracle.recognition()->graph);
    if (r.value) {
      e.lower = e.upper = *r.value;
      e.colouring = colouring_from_labels(standard_basis(n), r.colouring, ColouringMode::weak);
      e.method = "matrix-unit recognition";
      finish(e);
      return e;
    }
  }
  const ScoreFn score = [n](const DerivedGraphs& d) {
    return BasisScore{exact_or(chi_exact(complement(d.distinguishability)).value, static_cast<int>(n)),
                      offdiag_slack(d)};
  };
  const auto pool = explore(x, oracle, opt, score);
  // Singletons always form a weak colouring.
  std::vector<int> singletons(n);
  for (std::size_t i = 0; i < n; ++i) singletons[i] = static_cast<int>(i);
  e.upper = static_cast<double>(n);
  e.colouring = colouring_from_labels(standard_basis(n), singletons, ColouringMode::weak);
  e.lower = 1;
  for (const auto& c : pool) {
    const auto hi = chi_exact(complement(c.graphs.distinguishability));
    if (hi.value && *hi.value < e.upper) {
      e.upper = *hi.value;
      e.colouring = colouring_from_labels(c.basis, hi.colouring, ColouringMode::weak);
      e.marginal = c.graphs.marginal;
    }
    const auto lo = chi_exact(c.graphs.confusability);
    if (lo.value) e.lower = std::max(e.lower, static_cast<double>(*lo.value));
  }
  e.method = "basis search (" + std::to_string(pool.size()) + " starts)";
  if (opt.use_theta) {
    const double a = alpha_theta_bound(x);
    if (a >= 1 && std::isfinite(a)) e.lower = std::max(e.lower, std::ceil(static_cast<double>(n) / a));
  }
  finish(e);
  return e;
}

namespace {

ScoreFn strong_score(std::size_t n) {
  return [n](const DerivedGraphs& d) {
    const long base = static_cast<long>(d.diagonal_violations) * static_cast<long>(n + 1);
    const long chi = d.diagonal_violations == 0
                         ? exact_or(chi_exact(complement(d.distinguishability)).value, static_cast<int>(n))
                         : static_cast<long>(n);
    return BasisScore{base + chi, d.slack + d.diagonal_slack};
  };
}

ParameterEstimate no_strong_colouring(const char* name) {
  ParameterEstimate e;
  e.name = name;
  e.lower = e.upper = kInf;
  e.exact = true;
  e.method = "identity lies in the space, so no v v^* is orthogonal to it";
  return e;
}

}  // namespace

ParameterEstimate strong_chi_estimate(const MatrixSubspace& x, const EstimateOptions& opt) {
  if (contains_identity(x)) return no_strong_colouring("chihat");
  ParameterEstimate e;
  e.name = "chihat";
  const std::size_t n = x.n();
  const RelationOracle oracle(x);
  const auto& rec = oracle.recognition();
  if (opt.recognize && rec && rec->is_traceless_of_graph()) {
    const auto r = chi_exact(rec->graph);
    if (r.value) {
      e.lower = e.upper = *r.value;
      e.colouring = colouring_from_labels(standard_basis(n), r.colouring, ColouringMode::strong);
      e.method = "matrix-unit recognition";
      finish(e);
      return e;
    }
  }
  const auto pool = explore(x, oracle, opt, strong_score(n));
  e.lower = 1;
  for (const auto& c : pool) {
    if (c.graphs.diagonal_violations == 0) {
      const auto hi = chi_exact(complement(c.graphs.distinguishability));
      if (hi.value && *hi.value < e.upper) {
        e.upper = *hi.value;
        e.colouring = colouring_from_labels(c.basis, hi.colouring, ColouringMode::strong);
        e.marginal = c.graphs.marginal;
      }
    }
    const auto lo = chi_exact(c.graphs.confusability);
    if (lo.value) e.lower = std::max(e.lower, static_cast<double>(*lo.value));
  }
  e.method = "basis search (" + std::to_string(pool.size()) + " starts)";
  if (!std::isfinite(e.upper)) e.method += ", no admissible basis found";
  if (opt.use_theta && x.kind() == SpaceKind::traceless) {
    double tl = 0.0;
    if (opt.theta_bar_lower) {
      tl = *opt.theta_bar_lower;
    } else {
      auto topt = opt.theta;
      if (std::isfinite(e.upper)) topt.upper_hint = e.upper;
      tl = theta_bar(x, topt).lower;
    }
    e.lower = std::max(e.lower, std::ceil(tl - 1e-6));
    const double a = alpha_theta_bound(x);
    if (a >= 1 && std::isfinite(a)) e.lower = std::max(e.lower, std::ceil(static_cast<double>(n) / a));
    e.method += ", theta-bar lower bound";
  }
  finish(e);
  return e;
}

ParameterEstimate chi0_estimate(const MatrixSubspace& x, const EstimateOptions& opt) {
  if (contains_identity(x)) return no_strong_colouring("chi0");
  ParameterEstimate e;
  e.name = "chi0";
  const std::size_t n = x.n();
  const RelationOracle oracle(x);
  const auto& rec = oracle.recognition();
  if (opt.recognize && rec && rec->is_traceless_of_graph()) {
    const auto r = chi_exact(rec->graph);
    if (r.value) {
      e.lower = e.upper = *r.value;
      e.colouring = colouring_from_labels(standard_basis(n), r.colouring, ColouringMode::minimal);
      e.method = "matrix-unit recognition";
      finish(e);
      return e;
    }
  }
  const auto score = strong_score(n);
  const auto pool = explore(x, oracle, opt, score);
  e.lower = 1;
  std::vector<const Candidate*> ranked;
  for (const auto& c : pool) {
    ranked.push_back(&c);
    // Orthonormal pool only: X contains a unitary copy of J_{H_v}.
    const auto lo = chi_exact(c.graphs.confusability);
    if (lo.value) e.lower = std::max(e.lower, static_cast<double>(*lo.value));
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const Candidate* a, const Candidate* b) { return better(a->score, b->score); });
  std::vector<std::vector<Vector>> seeds;
  for (std::size_t i = 0; i < ranked.size() && i < 4; ++i) seeds.push_back(ranked[i]->basis);
  auto sheared = explore(x, oracle, opt, score, MoveKind::shear, seeds);
  std::vector<Candidate> all(pool.begin(), pool.end());
  for (auto& c : sheared) all.push_back(std::move(c));
  for (const auto& c : all) {
    if (c.graphs.diagonal_violations != 0) continue;
    const auto hi = chi_exact(complement(c.graphs.distinguishability));
    if (hi.value && *hi.value < e.upper) {
      e.upper = *hi.value;
      e.colouring = colouring_from_labels(c.basis, hi.colouring, ColouringMode::minimal);
      e.marginal = c.graphs.marginal;
    }
  }
  e.method = "orthonormal and sheared basis search (" + std::to_string(all.size()) + " starts)";
  finish(e);
  return e;
}

namespace {

// Kuhn augmenting path on the allowed pattern restricted to free columns.
bool augment(std::size_t row, const std::vector<std::vector<bool>>& allowed, const std::vector<bool>& col_free,
             std::vector<long>& match_col, std::vector<bool>& visited) {
  for (std::size_t j = 0; j < allowed[row].size(); ++j) {
    if (!allowed[row][j] || !col_free[j] || visited[j]) continue;
    visited[j] = true;
    if (match_col[j] < 0 ||
        augment(static_cast<std::size_t>(match_col[j]), allowed, col_free, match_col, visited)) {
      match_col[j] = static_cast<long>(row);
      return true;
    }
  }
  return false;
}

bool perfect_matching_exists(const std::vector<std::vector<bool>>& allowed, std::size_t first_row,
                             const std::vector<bool>& col_free) {
  const std::size_t n = allowed.size();
  std::vector<long> match_col(n, -1);
  for (std::size_t r = first_row; r < n; ++r) {
    std::vector<bool> visited(n, false);
    if (!augment(r, allowed, col_free, match_col, visited)) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> lexicographic_matching(const std::vector<Vector>& unit, double tol_entry) {
  const std::size_t n = unit.size();
  std::vector<std::vector<bool>> allowed(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) allowed[i][j] = std::abs(unit[i][j]) > tol_entry;
  std::vector<bool> col_free(n, true);
  if (!perfect_matching_exists(allowed, 0, col_free)) return std::nullopt;
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (std::size_t j = 0; j < n && !placed; ++j) {
      if (!allowed[i][j] || !col_free[j]) continue;
      col_free[j] = false;
      if (perfect_matching_exists(allowed, i + 1, col_free)) {
        sigma[i] = j;
        placed = true;
      } else {
        col_free[j] = true;
      }
    }
    if (!placed) return std::nullopt;
  }
  return sigma;
}

}  // namespace

std::vector<std::size_t> support_permutation(std::span<const Vector> basis, double tol_entry) {
  const std::size_t n = basis.size();
  std::vector<Vector> unit;
  for (const auto& v : basis) {
    if (v.size() != n) throw DimensionError("support_permutation: expected n vectors of length n");
    unit.push_back(normalized(v));
  }
  if (normalized_abs_det(unit) <= tol::rank) throw InvariantError("support_permutation: vectors are dependent");
  for (double t = tol_entry; t >= 1e-15; t *= 1e-3)
    if (auto sigma = lexicographic_matching(unit, t)) return *sigma;
  throw InvariantError("support_permutation: no perfect matching on the support pattern");
}

std::vector<int> pull_back_colouring(const Colouring& c) {
  const auto sigma = support_permutation(c.basis);
  std::vector<int> colour(c.basis.size(), -1);
  for (std::size_t s = 0; s < c.parts.size(); ++s)
    for (const auto i : c.parts[s]) colour[sigma[i]] = static_cast<int>(s);
  return colour;
}

SandwichReport sandwich_check(const MatrixSubspace& s, std::size_t d, const EstimateOptions& opt) {
  if (s.kind() != SpaceKind::system) throw InvariantError("sandwich: expected an operator system");
  SandwichReport r;
  r.d = d;
  const auto big = amplify(s, d);
  const auto comp = perp(big);
  r.n = big.n();
  r.alpha = alpha_estimate(big, opt);
  r.theta = theta_system(big, opt.theta);
  auto copt = opt;
  copt.theta_bar_lower = r.theta.lower;  // theta-bar(S^perp) = theta(S)
  r.chihat = strong_chi_estimate(comp, copt);
  if (r.chihat.upper < r.theta.upper) {
    r.theta.upper = r.chihat.upper;
    r.theta.upper_source = "strong chromatic number of the complement";
    r.theta.exact = r.theta.width() <= kThetaExactWidth;
  }
  r.pass = r.alpha.lower <= r.theta.upper + 1e-6 && r.theta.lower <= r.chihat.upper + 1e-6;
  return r;
}

ChiOmegaReport chi_omega_product_check(const MatrixSubspace& j, const EstimateOptions& opt) {
  ChiOmegaReport r;
  r.n = j.n();
  const auto chihat = strong_chi_estimate(j, opt);
  const auto omega = omega_estimate(perp(j), opt);
  r.chihat_upper = chihat.upper;
  r.omega_upper = omega.upper;
  r.bound_holds = !std::isfinite(chihat.upper) ||
                  static_cast<long>(chihat.upper) * static_cast<long>(omega.upper) >= static_cast<long>(r.n);
  r.exact_known = chihat.exact && omega.exact;
  r.exact_holds = r.exact_known && std::isfinite(chihat.lower) &&
                  static_cast<long>(chihat.lower) * static_cast<long>(omega.lower) >= static_cast<long>(r.n);
  return r;
}

}  // namespace ncg
