#include <cmath>

#include "doctest.h"
#include "ncg/ncgraph.hpp"
#include "ncg/parameters.hpp"

using namespace ncg;

namespace {

EstimateOptions quick(std::uint64_t seed = 0) {
  EstimateOptions o;
  o.search.starts = 8;
  o.search.seed = seed;
  o.theta.budget = 8;
  o.theta.seed = seed;
  return o;
}

MatrixSubspace span_of(std::vector<ComplexMatrix> gens, std::size_t n, SpaceKind k) { return span(gens, n, k); }

}  // namespace

TEST_CASE("graph-derived spaces give the classical parameters") {
  const auto c5 = Graph::cycle(5);
  const auto s = system_from_graph(c5);
  const auto j = traceless_from_graph(c5);
  CHECK(alpha_estimate(s).upper == 2);
  CHECK(alpha_estimate(j).exact);
  CHECK(omega_estimate(j).lower == 2);
  const auto chi = chi_estimate(s);
  CHECK(chi.exact);
  CHECK(chi.upper == 3);
  const auto hat = strong_chi_estimate(j);
  CHECK(hat.exact);
  CHECK(hat.lower == 3);
  REQUIRE(hat.colouring);
  CHECK(validate_colouring(j, *hat.colouring, tol::orth).ok);
  CHECK(chi0_estimate(j).upper == 3);
  CHECK(omega_estimate(system_from_graph(Graph::complete(4))).upper == 4);
}

TEST_CASE("zero space has alpha n") {
  const auto e = alpha_estimate(MatrixSubspace::zero(4));
  CHECK(e.exact);
  CHECK(e.lower == 4);
}

TEST_CASE("spaces containing the identity admit no strong colouring") {
  const auto e = strong_chi_estimate(system_from_graph(Graph::path(3)));
  CHECK(std::isinf(e.lower));
  CHECK(e.exact);
}

TEST_CASE("span{I, E_ij : i != j} has alpha 1 and chi n") {
  for (std::size_t n = 3; n <= 4; ++n) {
    std::vector<ComplexMatrix> gens{ComplexMatrix::identity(n)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (i != k) gens.push_back(ComplexMatrix::unit(n, i, k));
    const auto s = span_of(gens, n, SpaceKind::system);
    const auto a = alpha_estimate(s, quick());
    CHECK(a.exact);
    CHECK(a.upper == 1);
    const auto c = chi_estimate(s, quick());
    CHECK(c.exact);
    CHECK(c.lower == static_cast<double>(n));
  }
}

TEST_CASE("traceless diagonals are strongly coloured by the Fourier basis") {
  const std::size_t n = 4;
  std::vector<ComplexMatrix> gens;
  for (std::size_t i = 1; i < n; ++i) gens.push_back(ComplexMatrix::unit(n, 0, 0) - ComplexMatrix::unit(n, i, i));
  const auto j = span_of(gens, n, SpaceKind::traceless);
  const auto c = colouring_from_labels(fourier_basis(n), {0, 1, 2, 3}, ColouringMode::strong);
  CHECK(validate_colouring(j, c, tol::orth).ok);
  // The standard basis fails: E_ii is not orthogonal to the diagonals.
  const auto bad = colouring_from_labels(standard_basis(n), {0, 1, 2, 3}, ColouringMode::strong);
  CHECK_FALSE(validate_colouring(j, bad).ok);
  const auto e = strong_chi_estimate(j, quick());
  CHECK(e.exact);
  CHECK(e.upper == static_cast<double>(n));
}

TEST_CASE("colouring validation rejects malformed witnesses") {
  const auto j = traceless_from_graph(Graph::cycle(4));
  const auto ok = colouring_from_labels(standard_basis(4), {0, 1, 0, 1}, ColouringMode::strong);
  CHECK(validate_colouring(j, ok).ok);
  auto clash = colouring_from_labels(standard_basis(4), {0, 0, 1, 1}, ColouringMode::strong);
  CHECK_FALSE(validate_colouring(j, clash).ok);
  auto missing = ok;
  missing.parts.back().pop_back();
  CHECK_FALSE(validate_colouring(j, missing).ok);
  auto skew = ok;
  skew.basis[1] = normalized(Vector{1.0, 1.0, 0.0, 0.0});
  CHECK_FALSE(validate_colouring(j, skew).ok);
  skew.mode = ColouringMode::minimal;
  CHECK_FALSE(validate_colouring(j, skew).ok);
}

TEST_CASE("unitary copies are bracketed around the classical value") {
  const auto g = Graph::cycle(5);
  const auto u = random_unitary(5, 17);
  const auto j = conjugate(traceless_from_graph(g), u);
  const auto hat = strong_chi_estimate(j, quick(3));
  CHECK(hat.lower <= 3);
  CHECK(hat.upper >= 3);
  const auto a = alpha_estimate(conjugate(system_from_graph(g), u), quick(3));
  CHECK(a.lower <= 2);
  CHECK(a.upper >= 2);
  CHECK(is_independent_set(conjugate(system_from_graph(g), u), a.family, false, tol::edge).ok);
}

TEST_CASE("support permutation and pull-back") {
  const auto u = permutation_matrix({2, 0, 1});
  std::vector<Vector> v;
  for (std::size_t j = 0; j < 3; ++j) v.push_back(u.column(j));
  const auto sigma = support_permutation(v);
  CHECK(sigma == std::vector<std::size_t>{2, 0, 1});
  const auto c = colouring_from_labels(v, {0, 1, 1}, ColouringMode::minimal);
  CHECK(pull_back_colouring(c) == std::vector<int>{1, 1, 0});
  std::vector<Vector> dep{{1.0, 0.0}, {1.0, 0.0}};
  CHECK_THROWS_AS(support_permutation(dep), InvariantError);
}

TEST_CASE("sandwich and chi-omega checks on C5") {
  const auto r = sandwich_check(system_from_graph(Graph::cycle(5)), 1);
  CHECK(r.pass);
  CHECK(r.alpha.upper == 2);
  CHECK(r.theta.lower == doctest::Approx(std::sqrt(5.0)).epsilon(1e-6));
  CHECK(r.chihat.upper == 3);
  const auto co = chi_omega_product_check(traceless_from_graph(Graph::cycle(5)));
  CHECK(co.bound_holds);
  CHECK(co.exact_known);
  CHECK(co.exact_holds);
}

TEST_CASE("estimates are deterministic in the seed") {
  const auto j = conjugate(traceless_from_graph(Graph::path(4)), random_unitary(4, 5));
  const auto a = strong_chi_estimate(j, quick(9));
  const auto b = strong_chi_estimate(j, quick(9));
  CHECK(a.lower == b.lower);
  CHECK(a.upper == b.upper);
  CHECK(a.method == b.method);
}
