#include <cstdlib>

#include "doctest.h"
#include "ncg/kernels.hpp"
#include "ncg/ncgraph.hpp"
#include "ncg/relations.hpp"
#include "ncg/search.hpp"

using namespace ncg;

TEST_CASE("pair_projection_norms: parallel and serial are bitwise equal") {
  const auto x = conjugate(traceless_from_graph(Graph::cycle(6)), random_unitary(6, 1));
  const auto u = random_unitary(6, 2);
  std::vector<Vector> v;
  for (std::size_t j = 0; j < 6; ++j) v.push_back(u.column(j));
  const auto a = pair_projection_norms(x.basis(), v);
  const auto b = pair_projection_norms_serial(x.basis(), v);
  CHECK(a == b);
  // Oracle: explicit projection of v_i v_j^*.
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      CHECK(a[i * 6 + j] == doctest::Approx(x.projection_norm(ComplexMatrix::outer(v[i], v[j]))).epsilon(1e-12));
}

TEST_CASE("multistart: parallel and serial agree") {
  const RelationOracle oracle(conjugate(traceless_from_graph(Graph::path(4)), random_unitary(4, 3)));
  const ScoreFn score = [](const DerivedGraphs& d) {
    return BasisScore{-static_cast<long>(d.distinguishability.edge_count()), d.slack};
  };
  SearchConfig cfg;
  cfg.starts = 6;
  cfg.seed = 5;
  cfg.seeds = {standard_basis(4)};
  const auto a = multistart(oracle, score, cfg);
  const auto b = multistart_serial(oracle, score, cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].score.primary == b[i].score.primary);
    CHECK(a[i].score.slack == b[i].score.slack);
    CHECK(a[i].basis == b[i].basis);
  }
  CHECK(&best_of(a) != nullptr);
}

TEST_CASE("joint diagonalization increases the diagonal mass") {
  const auto x = conjugate(system_from_graph(Graph(4)), random_unitary(4, 7));
  const auto h = hermitian_basis(x);
  const auto u = random_unitary(4, 9);
  std::vector<Vector> v;
  for (std::size_t j = 0; j < 4; ++j) v.push_back(u.column(j));
  const double before = diagonal_mass(h, v);
  const auto w = joint_diagonalize(h, v);
  CHECK(diagonal_mass(h, w) >= before);
  CHECK(gram_defect(w) < 1e-12);
  // Commuting family: the optimum is exact joint diagonalization.
  double off = 0.0;
  for (const auto& b : h)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (i != j) off = std::max(off, std::abs(vdot(w[i], b * w[j])));
  CHECK(off < 1e-8);
}

TEST_CASE("parallel_map keeps index order and rethrows") {
  const auto r = parallel_map(50, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < 50; ++i) CHECK(r[i] == static_cast<int>(i * i));
  CHECK_THROWS_AS(parallel_map(5,
                               [](std::size_t i) {
                                 if (i == 3) throw InvariantError("boom");
                                 return 0;
                               }),
                  InvariantError);
  CHECK(thread_count() >= 1);
}
