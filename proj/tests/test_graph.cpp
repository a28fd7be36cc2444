#include <bit>
#include <random>

#include "doctest.h"
#include "ncg/error.hpp"
#include "ncg/graph.hpp"

using namespace ncg;

namespace {

// Brute-force oracles over all vertex subsets / colour assignments.
int brute_alpha(const Graph& g) {
  const std::size_t n = g.n();
  int best = 0;
  for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if ((s >> i) & 1U) ok = (g.neighbours(i) & s) == 0;
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

int brute_chi(const Graph& g) {
  const std::size_t n = g.n();
  if (n == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> c(n, 0);
    while (true) {
      if (is_proper_colouring(g, c)) return k;
      std::size_t i = 0;
      while (i < n && ++c[i] == k) c[i++] = 0;
      if (i == n) break;
    }
  }
}

Graph random_g(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

}  // namespace

TEST_CASE("exact alpha, omega, chi agree with brute force") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const auto g = random_g(3 + s % 6, 0.2 + 0.1 * static_cast<double>(s % 6), s);
    const auto a = alpha_exact(g);
    const auto w = omega_exact(g);
    const auto c = chi_exact(g);
    REQUIRE(a.value);
    REQUIRE(c.value);
    CHECK(*a.value == brute_alpha(g));
    CHECK(*w.value == brute_alpha(complement(g)));
    CHECK(*c.value == brute_chi(g));
    CHECK(is_independent(g, a.vertices));
    CHECK(a.vertices.size() == static_cast<std::size_t>(*a.value));
    CHECK(is_proper_colouring(g, c.colouring));
  }
}

TEST_CASE("classical values of named graphs") {
  const auto c5 = Graph::cycle(5);
  CHECK(*alpha_exact(c5).value == 2);
  CHECK(*omega_exact(c5).value == 2);
  CHECK(*chi_exact(c5).value == 3);
  CHECK(*chi_exact(Graph::complete(6)).value == 6);
  CHECK(*chi_exact(Graph(4)).value == 1);
  CHECK(*alpha_exact(petersen()).value == 4);
  CHECK(*chi_exact(petersen()).value == 3);
  CHECK(*chi_exact(Graph(0)).value == 0);
}

TEST_CASE("exact search reports unavailable beyond its node budget") {
  const auto g = random_g(30, 0.5, 7);
  CHECK_FALSE(chi_exact(g, 10).value.has_value());
}

TEST_CASE("isomorphism class counts for n <= 6") {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(isomorphism_classes(n).size() == expected[n]);
}

TEST_CASE("canonical code is invariant under relabelling") {
  const auto g = random_g(6, 0.5, 3);
  const std::vector<std::size_t> sigma{3, 0, 5, 1, 4, 2};
  CHECK(canonical_code(g) == canonical_code(relabel(g, sigma)));
  CHECK(canonical_code(Graph::path(4)) != canonical_code(Graph::cycle(4)));
}

TEST_CASE("products and complement") {
  const auto k2 = Graph::complete(2);
  const auto box = cartesian_product(k2, k2);
  CHECK(box.edge_count() == 4);
  CHECK(canonical_code(box) == canonical_code(Graph::cycle(4)));
  const auto cat = categorical_product(k2, k2);
  CHECK(cat.edge_count() == 2);
  CHECK(cat.adjacent(0 * 2 + 0, 1 * 2 + 1));
  CHECK(complement(Graph::cycle(5)).edge_count() == 5);
}

TEST_CASE("edge-list parsing") {
  const auto p = parse_graph("4 3\n1 2\n2 3\n2 1\n");
  CHECK(p.graph.n() == 4);
  CHECK(p.graph.edge_count() == 2);
  CHECK(p.warnings.size() == 1);
  CHECK_THROWS_AS(parse_graph("3 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 1\n1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("x"), ParseError);
  const auto c5 = Graph::cycle(5);
  CHECK(parse_graph(emit_graph(c5)).graph == c5);
}
