#include "ncg/ncgraph.hpp"

namespace ncg {

MatrixSubspace system_from_graph(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<ComplexMatrix> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i == j || g.adjacent(i, j)) gens.push_back(ComplexMatrix::unit(n, i, j));
  return span(gens, n, SpaceKind::system);
}

MatrixSubspace traceless_from_graph(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<ComplexMatrix> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.adjacent(i, j)) gens.push_back(ComplexMatrix::unit(n, i, j));
  return span(gens, n, SpaceKind::traceless);
}

MatrixSubspace conjugate(const MatrixSubspace& v, const ComplexMatrix& u) {
  if (!u.is_square() || u.rows() != v.n()) throw DimensionError("conjugate: unitary has the wrong dimension");
  if (isometry_defect(u) > tol::orth * static_cast<double>(std::max<std::size_t>(v.n(), 1)))
    throw InvariantError("conjugate: matrix is not unitary");
  const ComplexMatrix ua = u.adjoint();
  std::vector<ComplexMatrix> gens;
  gens.reserve(v.dim());
  for (const auto& b : v.basis()) gens.push_back(u * b * ua);
  return span(gens, v.n(), v.kind());
}

MatrixSubspace amplify(const MatrixSubspace& v, std::size_t d) {
  if (d == 0) throw DimensionError("amplify: d must be at least 1");
  if (d == 1) return v;
  std::vector<ComplexMatrix> gens;
  gens.reserve(d * d * v.dim());
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      const auto ekl = ComplexMatrix::unit(d, k, l);
      for (const auto& b : v.basis()) gens.push_back(kron(ekl, b));
    }
  return span(gens, d * v.n(), v.kind());
}

MatrixSubspace diagonal_span(const OrthonormalFamily& x) {
  if (!x.is_full()) throw InvariantError("diagonal_span: family is not a full basis");
  std::vector<ComplexMatrix> gens;
  for (const auto& xi : x.vectors()) gens.push_back(ComplexMatrix::outer(xi, xi));
  return span(gens, x.n(), SpaceKind::system);
}

MatrixSubspace box_product(const MatrixSubspace& j, const MatrixSubspace& k, const OrthonormalFamily& v,
                           const OrthonormalFamily& w) {
  if (v.n() != j.n() || w.n() != k.n()) throw DimensionError("box_product: basis dimensions do not match");
  const auto dv = diagonal_span(v);
  const auto dw = diagonal_span(w);
  std::vector<ComplexMatrix> gens;
  for (const auto& a : j.basis())
    for (const auto& b : dw.basis()) gens.push_back(kron(a, b));
  for (const auto& a : dv.basis())
    for (const auto& b : k.basis()) gens.push_back(kron(a, b));
  const SpaceKind kind = (j.kind() == SpaceKind::traceless && k.kind() == SpaceKind::traceless)
                             ? SpaceKind::traceless
                             : SpaceKind::plain;
  return span(gens, j.n() * k.n(), kind);
}

ComplexMatrix permutation_matrix(const std::vector<std::size_t>& sigma) {
  const std::size_t n = sigma.size();
  ComplexMatrix p(n);
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i] >= n || hit[sigma[i]]) throw DimensionError("permutation_matrix: not a permutation");
    hit[sigma[i]] = true;
    p(sigma[i], i) = 1.0;
  }
  return p;
}

}  // namespace ncg
