#include "ncg/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "ncg/eig.hpp"

namespace ncg {

std::string_view to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::optimal: return "optimal";
    case SdpStatus::max_iter: return "max_iter";
    case SdpStatus::infeasible: return "infeasible";
    case SdpStatus::unbounded: return "unbounded";
  }
  return "max_iter";
}

void validate(const SdpProblem& p) {
  if (!p.f0.is_square()) throw DimensionError("sdp: F0 is not square");
  if (p.c.size() != p.m || p.f.size() != p.m) throw DimensionError("sdp: m does not match c / F");
  if (!is_hermitian(p.f0)) throw InvariantError("sdp: F0 is not Hermitian");
  for (const auto& fk : p.f) {
    if (fk.rows() != p.f0.rows() || fk.cols() != p.f0.cols()) throw DimensionError("sdp: constraint shape mismatch");
    if (!is_hermitian(fk)) throw InvariantError("sdp: constraint matrix is not Hermitian");
  }
}

namespace {

ComplexMatrix assemble(const SdpProblem& p, const std::vector<double>& x) {
  ComplexMatrix f = p.f0;
  for (std::size_t k = 0; k < p.m; ++k) {
    if (x[k] == 0.0) continue;
    auto df = f.data();
    const auto dk = p.f[k].data();
    for (std::size_t e = 0; e < df.size(); ++e) df[e] += x[k] * dk[e];
  }
  return f;
}

ComplexMatrix lower_inverse(const ComplexMatrix& l) {
  const std::size_t n = l.rows();
  ComplexMatrix inv(n);
  for (std::size_t j = 0; j < n; ++j) {
    inv(j, j) = 1.0 / l(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = 0.0;
      for (std::size_t k = j; k < i; ++k) s += l(i, k) * inv(k, j);
      inv(i, j) = -s / l(i, i);
    }
  }
  return inv;
}

struct BarrierEval {
  bool feasible = false;
  double value = 0.0;  // -c.x - mu log det F
  ComplexMatrix chol;
};

BarrierEval barrier(const SdpProblem& p, const std::vector<double>& x, double mu) {
  BarrierEval e;
  const auto f = assemble(p, x);
  if (!cholesky(f, e.chol)) return e;
  double logdet = 0.0;
  for (std::size_t i = 0; i < f.rows(); ++i) logdet += 2.0 * std::log(e.chol(i, i).real());
  double cx = 0.0;
  for (std::size_t k = 0; k < p.m; ++k) cx += p.c[k] * x[k];
  e.feasible = std::isfinite(logdet);
  e.value = -cx - mu * logdet;
  return e;
}

// Follows the central path from a strictly feasible x. `stop_early` is
// consulted after every accepted step.
SdpSolution path_follow(const SdpProblem& p, std::vector<double> x, const SdpOptions& opt,
                        const std::function<bool(const std::vector<double>&)>& stop_early) {
  const std::size_t m = p.m;
  const std::size_t n = p.f0.rows();
  SdpSolution sol;
  double mu = opt.mu0;
  int steps = 0;
  bool early = false;

  auto current = barrier(p, x, mu);
  if (!current.feasible) throw InvariantError("sdp: start point is not strictly feasible");

  while (true) {
    for (int inner = 0; inner < 200; ++inner) {
      if (steps >= opt.max_newton) {
        sol.status = SdpStatus::max_iter;
        goto finish;
      }
      const auto linv = lower_inverse(current.chol);
      const auto linv_adj = linv.adjoint();
      std::vector<ComplexMatrix> g(m);
      std::vector<double> grad(m), hess(m * m);
      for (std::size_t k = 0; k < m; ++k) {
        g[k] = linv * p.f[k] * linv_adj;
        grad[k] = -p.c[k] - mu * g[k].trace().real();
      }
      double hscale = 0.0;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = k; l < m; ++l) {
          const double h = mu * hs_inner(g[k], g[l]).real();
          hess[k * m + l] = h;
          hess[l * m + k] = h;
          if (k == l) hscale = std::max(hscale, h);
        }
      std::vector<double> dx(m);
      for (std::size_t k = 0; k < m; ++k) dx[k] = -grad[k];
      bool solved = false;
      for (double ridge = 0.0; !solved && ridge < 1.0; ridge = (ridge == 0.0 ? 1e-14 : ridge * 100.0)) {
        auto h = hess;
        for (std::size_t k = 0; k < m; ++k) h[k * m + k] += ridge * std::max(hscale, 1e-300);
        auto rhs = dx;
        if (cholesky_solve(h, m, rhs)) {
          dx = rhs;
          solved = true;
        }
      }
      if (!solved) {
        sol.status = SdpStatus::max_iter;
        goto finish;
      }
      double decrement = 0.0;
      for (std::size_t k = 0; k < m; ++k) decrement -= grad[k] * dx[k];
      if (decrement / mu <= 1e-12 || m == 0) break;

      double t = 1.0;
      BarrierEval trial;
      std::vector<double> xt(m);
      bool accepted = false;
      for (int ls = 0; ls < 80; ++ls) {
        for (std::size_t k = 0; k < m; ++k) xt[k] = x[k] + t * dx[k];
        trial = barrier(p, xt, mu);
        if (trial.feasible && trial.value <= current.value - 0.25 * t * decrement) {
          accepted = true;
          break;
        }
        t *= 0.5;
      }
      ++steps;
      if (!accepted) break;  // no further progress at this mu
      x = xt;
      current = std::move(trial);
      double xnorm = 0.0;
      for (const double v : x) xnorm = std::max(xnorm, std::abs(v));
      if (xnorm > 1e12) {
        sol.status = SdpStatus::unbounded;
        goto finish;
      }
      if (stop_early && stop_early(x)) {
        early = true;
        goto finish;
      }
    }
    if (static_cast<double>(n) * mu <= opt.gap_target) {
      sol.status = SdpStatus::optimal;
      break;
    }
    mu /= opt.mu_factor;
    current = barrier(p, x, mu);
  }

finish:
  (void)early;
  sol.x = x;
  sol.newton_steps = steps;
  sol.barrier_mu = mu;
  sol.gap = static_cast<double>(n) * mu;
  double cx = 0.0;
  for (std::size_t k = 0; k < m; ++k) cx += p.c[k] * x[k];
  sol.value = cx;
  const auto f = assemble(p, x);
  sol.min_eig = n == 0 ? 0.0 : lambda_min(f);
  ComplexMatrix l;
  if (cholesky(f, l)) {
    const auto linv = lower_inverse(l);
    sol.dual = mu * (linv.adjoint() * linv);
  }
  return sol;
}

}  // namespace

SdpSolution solve_sdp(const SdpProblem& p, const SdpOptions& options) {
  validate(p);
  const std::size_t n = p.f0.rows();
  if (options.start) {
    if (options.start->size() != p.m) throw DimensionError("sdp: start point has the wrong length");
    return path_follow(p, *options.start, options, {});
  }
  ComplexMatrix l;
  if (cholesky(p.f0, l)) return path_follow(p, std::vector<double>(p.m, 0.0), options, {});

  // Phase I: maximize s subject to F(x) - s I >= 0, from x = 0.
  SdpProblem aux;
  aux.m = p.m + 1;
  aux.c.assign(aux.m, 0.0);
  aux.c.back() = 1.0;
  aux.f0 = p.f0;
  aux.f = p.f;
  aux.f.push_back(-1.0 * ComplexMatrix::identity(n));
  std::vector<double> y(aux.m, 0.0);
  y.back() = lambda_min(p.f0) - 1.0;
  auto aux_opts = options;
  auto phase1 = path_follow(aux, y, aux_opts, [](const std::vector<double>& v) { return v.back() > 1e-6; });
  if (phase1.x.back() <= 1e-6) {
    SdpSolution infeasible;
    infeasible.status = phase1.status == SdpStatus::optimal ? SdpStatus::infeasible : phase1.status;
    infeasible.x.assign(p.m, 0.0);
    infeasible.min_eig = phase1.x.back();
    infeasible.value = -std::numeric_limits<double>::infinity();
    infeasible.newton_steps = phase1.newton_steps;
    return infeasible;
  }
  std::vector<double> x(phase1.x.begin(), phase1.x.end() - 1);
  auto sol = path_follow(p, x, options, {});
  sol.newton_steps += phase1.newton_steps;
  return sol;
}

ClassicalTheta theta_classical_full(const Graph& g) {
  const std::size_t n = g.n();
  if (n == 0) return {0.0, ComplexMatrix(0), {}};
  // Variables: t, then one symmetric entry a_e per edge. Maximize -t.
  const auto edges = g.edges();
  SdpProblem p;
  p.m = 1 + edges.size();
  p.c.assign(p.m, 0.0);
  p.c[0] = -1.0;
  p.f0 = ComplexMatrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i == j || !g.adjacent(i, j)) p.f0(i, j) = -1.0;
  p.f.push_back(ComplexMatrix::identity(n));
  for (const auto& [i, j] : edges) {
    ComplexMatrix fe(n);
    fe(i, j) = -1.0;
    fe(j, i) = -1.0;
    p.f.push_back(std::move(fe));
  }
  SdpOptions opt;
  std::vector<double> start(p.m, 0.0);
  start[0] = static_cast<double>(n) + 1.0;  // lambda_max(A) <= n at a = 0
  opt.start = start;
  ClassicalTheta out;
  out.solution = solve_sdp(p, opt);
  if (out.solution.status != SdpStatus::optimal) throw ConvergenceError("theta_classical: SDP did not converge");
  out.value = -out.solution.value;
  out.certificate = out.solution.dual;
  return out;
}

double theta_classical(const Graph& g) { return theta_classical_full(g).value; }

}  // namespace ncg
