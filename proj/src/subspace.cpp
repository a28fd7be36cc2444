#include "ncg/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ncg {

std::string_view to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::system: return "system";
    case SpaceKind::traceless: return "traceless";
    case SpaceKind::plain: return "plain";
  }
  return "plain";
}

SpaceKind space_kind_from_string(std::string_view s) {
  if (s == "system") return SpaceKind::system;
  if (s == "traceless") return SpaceKind::traceless;
  if (s == "plain") return SpaceKind::plain;
  throw ParseError("unknown subspace kind '" + std::string(s) + "'");
}

namespace {

// x -= <x, b> b
void subtract_component(ComplexMatrix& x, const ComplexMatrix& b) {
  const cplx c = hs_inner(x, b);
  auto dx = x.data();
  const auto db = b.data();
  for (std::size_t k = 0; k < dx.size(); ++k) dx[k] -= c * db[k];
}

}  // namespace

MatrixSubspace MatrixSubspace::zero(std::size_t n, SpaceKind kind) {
  if (kind == SpaceKind::system) throw InvariantError("the zero space is not an operator system");
  return MatrixSubspace(n, kind, {});
}

MatrixSubspace MatrixSubspace::full(std::size_t n) {
  std::vector<ComplexMatrix> units;
  units.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) units.push_back(ComplexMatrix::unit(n, i, j));
  return MatrixSubspace(n, SpaceKind::system, std::move(units));
}

std::vector<cplx> MatrixSubspace::coefficients(const ComplexMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw DimensionError("projection: dimension mismatch");
  std::vector<cplx> c(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = hs_inner(x, basis_[k]);
  return c;
}

ComplexMatrix MatrixSubspace::project(const ComplexMatrix& x) const {
  const auto c = coefficients(x);
  ComplexMatrix p(n_);
  auto dp = p.data();
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const auto db = basis_[k].data();
    for (std::size_t e = 0; e < dp.size(); ++e) dp[e] += c[k] * db[e];
  }
  return p;
}

double MatrixSubspace::projection_norm(const ComplexMatrix& x) const {
  double s = 0.0;
  for (const auto& c : coefficients(x)) s += std::norm(c);
  return std::sqrt(s);
}

double MatrixSubspace::residual(const ComplexMatrix& x) const { return (x - project(x)).hs_norm(); }

std::string MatrixSubspace::kind_violation() const {
  if (kind_ == SpaceKind::plain) return {};
  for (const auto& b : basis_) {
    if (residual(b.adjoint()) > tol::orth) return "span is not closed under adjoint";
  }
  if (kind_ == SpaceKind::system) {
    if (n_ == 0 || residual(ComplexMatrix::identity(n_)) > tol::orth) return "identity is not in the span";
  } else {
    for (const auto& b : basis_)
      if (std::abs(b.trace()) > tol::orth) return "span contains an element with nonzero trace";
  }
  return {};
}

MatrixSubspace span(std::span<const ComplexMatrix> mats, std::size_t n, SpaceKind kind) {
  double largest = 0.0;
  for (const auto& m : mats) {
    if (m.rows() != n || m.cols() != n) throw DimensionError("span: generators have mixed dimensions");
    if (!m.all_finite()) throw InvariantError("span: generator has non-finite entries");
    largest = std::max(largest, m.hs_norm());
  }
  const double cutoff = tol::rank * std::max(largest, 1.0);

  std::vector<ComplexMatrix> basis;
  for (const auto& m : mats) {
    ComplexMatrix r = m;
    const double before = r.hs_norm();
    if (before <= cutoff) continue;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) subtract_component(r, b);
    const double after = r.hs_norm();
    // Relative drop guards against accepting pure rounding noise.
    if (after <= cutoff || after <= 1e-10 * before) continue;
    r *= 1.0 / after;
    basis.push_back(std::move(r));
  }
  MatrixSubspace out(n, kind, std::move(basis));
  if (auto why = out.kind_violation(); !why.empty())
    throw InvariantError(std::string("span(kind=") + std::string(to_string(kind)) + "): " + why);
  return out;
}

MatrixSubspace span(std::span<const ComplexMatrix> mats, SpaceKind kind) {
  if (mats.empty()) throw DimensionError("span: empty generator list needs an explicit dimension");
  return span(mats, mats.front().rows(), kind);
}

ComplexMatrix project(const ComplexMatrix& x, const MatrixSubspace& v) { return v.project(x); }

MatrixSubspace perp(const MatrixSubspace& v) {
  const std::size_t n = v.n();
  const std::size_t nn = n * n;
  const std::size_t target = nn - v.dim();

  // Column-pivoted Gram-Schmidt over the matrix units: candidate residuals are
  // kept up to date and the largest one is accepted at every step.
  std::vector<ComplexMatrix> resid;
  resid.reserve(nn);
  for (std::size_t u = 0; u < nn; ++u) {
    ComplexMatrix r = ComplexMatrix::unit(n, u / n, u % n);
    for (const auto& b : v.basis()) subtract_component(r, b);
    resid.push_back(std::move(r));
  }
  std::vector<double> rnorm(nn);
  std::vector<bool> used(nn, false);
  std::vector<ComplexMatrix> out;
  out.reserve(target);
  while (out.size() < target) {
    for (std::size_t u = 0; u < nn; ++u) rnorm[u] = used[u] ? -1.0 : resid[u].hs_norm();
    const double best = *std::max_element(rnorm.begin(), rnorm.end());
    if (best <= tol::rank) break;
    std::size_t pick = 0;
    while (rnorm[pick] < best - 1e-12) ++pick;
    used[pick] = true;
    ComplexMatrix q = resid[pick];
    for (const auto& b : v.basis()) subtract_component(q, b);
    for (const auto& b : out) subtract_component(q, b);
    q *= 1.0 / q.hs_norm();
    for (std::size_t u = 0; u < nn; ++u)
      if (!used[u]) subtract_component(resid[u], q);
    out.push_back(std::move(q));
  }
  if (out.size() != target) throw InvariantError("perp: complement basis is rank deficient");

  SpaceKind kind = SpaceKind::plain;
  if (v.kind() == SpaceKind::system) kind = SpaceKind::traceless;
  if (v.kind() == SpaceKind::traceless) kind = SpaceKind::system;
  MatrixSubspace result(n, kind, std::move(out));
  if (auto why = result.kind_violation(); !why.empty()) throw InvariantError("perp: " + why);
  return result;
}

MatrixSubspace tensor(const MatrixSubspace& a, const MatrixSubspace& b) {
  SpaceKind kind = SpaceKind::plain;
  if (a.kind() != SpaceKind::plain && b.kind() != SpaceKind::plain) {
    kind = (a.kind() == SpaceKind::traceless || b.kind() == SpaceKind::traceless) ? SpaceKind::traceless
                                                                                   : SpaceKind::system;
  }
  std::vector<ComplexMatrix> gens;
  gens.reserve(a.dim() * b.dim());
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) gens.push_back(kron(x, y));
  return span(gens, a.n() * b.n(), kind);
}

double subspace_distance(const MatrixSubspace& a, const MatrixSubspace& b) {
  if (a.n() != b.n() || a.dim() != b.dim()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const auto& x : a.basis()) worst = std::max(worst, b.residual(x));
  for (const auto& y : b.basis()) worst = std::max(worst, a.residual(y));
  return worst;
}

bool subspace_equal(const MatrixSubspace& a, const MatrixSubspace& b, double tolerance) {
  return subspace_distance(a, b) <= tolerance;
}

std::vector<ComplexMatrix> hermitian_basis(const MatrixSubspace& v) {
  std::vector<ComplexMatrix> cands;
  cands.reserve(2 * v.dim());
  for (const auto& b : v.basis()) {
    const ComplexMatrix ba = b.adjoint();
    cands.push_back(0.5 * (b + ba));
    cands.push_back(cplx(0.0, 0.5) * (b - ba));
  }
  auto real_inner = [](const ComplexMatrix& x, const ComplexMatrix& y) { return hs_inner(x, y).real(); };
  std::vector<ComplexMatrix> out;
  for (auto& c : cands) {
    const double before = c.hs_norm();
    if (before <= tol::rank) continue;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& h : out) {
        const double p = real_inner(c, h);
        c -= cplx(p) * h;
      }
    const double after = c.hs_norm();
    if (after <= 1e-8 * std::max(before, 1.0)) continue;
    c *= 1.0 / after;
    out.push_back(std::move(c));
    if (out.size() == v.dim()) break;
  }
  return out;
}

}  // namespace ncg
