#include "doctest.h"
#include "ncg/ncgraph.hpp"
#include "ncg/relations.hpp"

using namespace ncg;

namespace {

Graph random_g(std::size_t n, std::uint64_t seed) {
  Graph g(n);
  std::uint64_t s = seed * 0x9e3779b97f4a7c15ULL + 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      s ^= s << 13, s ^= s >> 7, s ^= s << 17;
      if (s & 1U) g.add_edge(i, j);
    }
  return g;
}

}  // namespace

TEST_CASE("dimensions of S_G and J_G") {
  const auto c5 = Graph::cycle(5);
  CHECK(traceless_from_graph(c5).dim() == 10);
  CHECK(system_from_graph(c5).dim() == 15);
  CHECK(traceless_from_graph(Graph(4)).dim() == 0);
  CHECK(system_from_graph(Graph::complete(3)).dim() == 9);
}

TEST_CASE("perp duality with the complement graph") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto g = random_g(2 + s % 5, s);
    const auto gc = complement(g);
    CHECK(subspace_distance(perp(system_from_graph(g)), traceless_from_graph(gc)) < 1e-8);
    CHECK(subspace_distance(perp(traceless_from_graph(g)), system_from_graph(gc)) < 1e-8);
  }
}

TEST_CASE("conjugation preserves dimension and kind") {
  const auto j = traceless_from_graph(Graph::path(4));
  const auto u = random_unitary(4, 3);
  const auto ju = conjugate(j, u);
  CHECK(ju.dim() == j.dim());
  CHECK(ju.kind() == SpaceKind::traceless);
  CHECK(subspace_equal(conjugate(ju, u.adjoint()), j));
}

TEST_CASE("amplification is M_d tensor X") {
  const auto j = traceless_from_graph(Graph::cycle(4));
  const auto a = amplify(j, 3);
  CHECK(a.n() == 12);
  CHECK(a.dim() == 9 * j.dim());
  CHECK(subspace_equal(a, tensor(MatrixSubspace::full(3), j)));
}

TEST_CASE("box and tensor products match the graph products") {
  for (std::uint64_t s = 0; s < 8; ++s) {
    const auto g = random_g(2 + s % 3, s);
    const auto h = random_g(1 + s % 4, s + 50);
    const auto box = box_product(traceless_from_graph(g), traceless_from_graph(h), OrthonormalFamily::standard(g.n()),
                                 OrthonormalFamily::standard(h.n()));
    CHECK(subspace_distance(box, traceless_from_graph(cartesian_product(g, h))) < 1e-8);
    CHECK(subspace_distance(tensor(traceless_from_graph(g), traceless_from_graph(h)),
                            traceless_from_graph(categorical_product(g, h))) < 1e-8);
  }
}

TEST_CASE("permutation matrices relabel graph spaces") {
  const auto g = Graph::path(4);
  const std::vector<std::size_t> sigma{2, 0, 3, 1};
  const auto p = permutation_matrix(sigma);
  CHECK(subspace_equal(conjugate(traceless_from_graph(g), p), traceless_from_graph(relabel(g, sigma))));
}

TEST_CASE("relation graphs of the standard basis recover the graph") {
  const auto g = random_g(5, 9);
  const auto s = system_from_graph(g);
  const auto v = OrthonormalFamily::standard(5);
  CHECK(confusability_graph(s, v) == g);
  CHECK(distinguishability_graph(s, v) == complement(g));
  const RelationOracle oracle(traceless_from_graph(g));
  REQUIRE(oracle.recognition().has_value());
  CHECK(oracle.recognition()->graph == g);
  CHECK(oracle.recognition()->is_traceless_of_graph());
  const RelationOracle conj(conjugate(traceless_from_graph(Graph::cycle(4)), random_unitary(4, 1)));
  CHECK_FALSE(conj.recognition().has_value());
}

TEST_CASE("table and table_serial agree bitwise") {
  const RelationOracle oracle(conjugate(system_from_graph(Graph::cycle(5)), random_unitary(5, 2)));
  const auto u = random_unitary(5, 4);
  std::vector<Vector> v;
  for (std::size_t j = 0; j < 5; ++j) v.push_back(u.column(j));
  const auto a = oracle.table(v), b = oracle.table_serial(v);
  CHECK(a.orth == b.orth);
  CHECK(a.memb == b.memb);
}
