#include <Eigen/Dense>

#include "doctest.h"
#include "ncg/ncgraph.hpp"
#include "ncg/subspace.hpp"

using namespace ncg;

namespace {

// Rank of the generators viewed as vectors in C^{n^2}, from Eigen's LU.
long eigen_rank(const std::vector<ComplexMatrix>& gens, std::size_t n) {
  if (gens.empty()) return 0;
  Eigen::MatrixXcd m(static_cast<long>(n * n), static_cast<long>(gens.size()));
  for (std::size_t c = 0; c < gens.size(); ++c)
    for (std::size_t e = 0; e < n * n; ++e) m(static_cast<long>(e), static_cast<long>(c)) = gens[c].data()[e];
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
  lu.setThreshold(1e-9);
  return lu.rank();
}

std::vector<ComplexMatrix> random_plain(std::size_t n, std::size_t k, std::uint64_t seed) {
  const auto big = random_unitary(n * n, seed);
  std::vector<ComplexMatrix> out;
  for (std::size_t c = 0; c < k; ++c) out.emplace_back(n, n, big.column(c));
  return out;
}

}  // namespace

TEST_CASE("span drops dependent generators and matches Eigen's rank") {
  auto gens = random_plain(3, 4, 11);
  gens.push_back(gens[0] + cplx(2.0, 1.0) * gens[2]);
  gens.push_back(ComplexMatrix(3));
  const auto s = span(gens, 3, SpaceKind::plain);
  CHECK(static_cast<long>(s.dim()) == eigen_rank(gens, 3));
  CHECK(s.dim() == 4);
  for (const auto& g : gens) CHECK(s.residual(g) < 1e-10);
}

TEST_CASE("span checks the kind invariants") {
  const std::vector<ComplexMatrix> offdiag{ComplexMatrix::unit(2, 0, 1)};
  CHECK_THROWS_AS(span(offdiag, 2, SpaceKind::traceless), InvariantError);
  const std::vector<ComplexMatrix> withadj{ComplexMatrix::unit(2, 0, 1), ComplexMatrix::unit(2, 1, 0)};
  CHECK(span(withadj, 2, SpaceKind::traceless).dim() == 2);
  CHECK_THROWS_AS(span(withadj, 2, SpaceKind::system), InvariantError);
  const std::vector<ComplexMatrix> mixed{ComplexMatrix::identity(2), ComplexMatrix::identity(3)};
  CHECK_THROWS_AS(span(mixed, SpaceKind::plain), DimensionError);
  CHECK_THROWS_AS(MatrixSubspace::zero(3, SpaceKind::system), InvariantError);
}

TEST_CASE("perp has complementary dimension, flips kind and is an involution") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const std::size_t k = 1 + seed % (n * n - 1);
    const auto s = span(random_plain(n, k, seed), n, SpaceKind::plain);
    const auto p = perp(s);
    CHECK(p.dim() == n * n - s.dim());
    for (const auto& a : s.basis())
      for (const auto& b : p.basis()) CHECK(std::abs(hs_inner(a, b)) < 1e-10);
    CHECK(subspace_equal(perp(p), s));
  }
  const auto sg = system_from_graph(Graph::cycle(4));
  CHECK(perp(sg).kind() == SpaceKind::traceless);
  CHECK(perp(perp(sg)).kind() == SpaceKind::system);
  CHECK(perp(MatrixSubspace::full(3)).dim() == 0);
  CHECK(perp(MatrixSubspace::zero(3)).dim() == 9);
}

TEST_CASE("tensor of subspaces multiplies dimensions") {
  const auto a = traceless_from_graph(Graph::path(3));
  const auto b = system_from_graph(Graph::complete(2));
  const auto t = tensor(a, b);
  CHECK(t.dim() == a.dim() * b.dim());
  CHECK(t.n() == 6);
  CHECK(t.kind() == SpaceKind::traceless);
}

TEST_CASE("hermitian basis has real dimension equal to the complex dimension") {
  const auto s = system_from_graph(Graph::cycle(5));
  const auto h = hermitian_basis(s);
  CHECK(h.size() == s.dim());
  for (const auto& x : h) {
    CHECK(is_hermitian(x));
    CHECK(s.residual(x) < 1e-10);
  }
}

TEST_CASE("projection and residual are consistent") {
  const auto s = system_from_graph(Graph::path(3));
  const auto x = random_unitary(3, 8);
  const auto p = s.project(x);
  CHECK(s.residual(p) < 1e-12);
  CHECK(std::abs(x.hs_norm() * x.hs_norm() - p.hs_norm() * p.hs_norm() - s.residual(x) * s.residual(x)) < 1e-10);
  CHECK(s.projection_norm(x) == doctest::Approx(p.hs_norm()));
}
