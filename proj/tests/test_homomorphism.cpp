#include "doctest.h"
#include "ncg/homomorphism.hpp"
#include "ncg/ncgraph.hpp"

using namespace ncg;

namespace {

// Direct partial trace over the first factor from the index definition.
ComplexMatrix trace_first_direct(const ComplexMatrix& x, std::size_t d, std::size_t n) {
  ComplexMatrix out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < d; ++k) out(a, b) += x(k * n + a, k * n + b);
  return out;
}

}  // namespace

TEST_CASE("partial traces agree with index sums and with the Kraus maps") {
  const auto x = random_unitary(6, 3);
  CHECK(max_abs_diff(partial_trace(x, 2, 3), trace_first_direct(x, 2, 3)) < 1e-13);
  CHECK(max_abs_diff(partial_trace_first_map(2, 3).apply(x), partial_trace(x, 2, 3)) < 1e-13);
  CHECK(max_abs_diff(partial_trace_second_map(2, 3).apply(x), partial_trace_second(x, 2, 3)) < 1e-13);
  const auto a = random_unitary(2, 1), b = random_unitary(3, 2);
  CHECK(max_abs_diff(partial_trace_second(kron(a, b), 2, 3), b.trace() * a) < 1e-13);
}

TEST_CASE("make_kraus checks shapes and trace preservation") {
  CHECK_THROWS_AS(make_kraus(2, 2, {ComplexMatrix(3, 2)}), DimensionError);
  CHECK_THROWS_AS(make_kraus(2, 2, {0.5 * ComplexMatrix::identity(2)}), InvariantError);
  CHECK(make_kraus(2, 2, {ComplexMatrix::identity(2)}).tp_defect() < 1e-15);
}

TEST_CASE("Kraus and isometry forms round trip") {
  const auto k = embed_amplify(3, 2);
  const auto iso = kraus_to_isometry(k);
  CHECK(iso.e.rows() == 2 * 6);
  CHECK(isometry_defect(iso.e) < 1e-13);
  const auto back = isometry_to_kraus(iso);
  REQUIRE(back.kraus.size() == k.kraus.size());
  for (std::size_t i = 0; i < k.kraus.size(); ++i) CHECK(max_abs_diff(back.kraus[i], k.kraus[i]) < 1e-15);
}

TEST_CASE("standard certificates verify") {
  const auto g = Graph::cycle(4);
  const auto j = traceless_from_graph(g);
  CHECK(verify_hom(identity_map(4), j, traceless_from_graph(Graph::complete(4))).ok);
  const auto u = random_unitary(4, 8);
  CHECK(verify_hom(unitary_map(u), j, conjugate(j, u)).ok);
  CHECK(verify_hom(embed_amplify(4, 2), j, amplify(j, 2)).ok);
  CHECK(verify_hom(partial_trace_first_map(2, 4), amplify(j, 2), j).ok);
  const auto h = traceless_from_graph(Graph::path(3));
  const auto v = OrthonormalFamily::standard(4), w = OrthonormalFamily::columns_of(random_unitary(3, 1));
  const auto box = box_product(j, h, v, w);
  CHECK(verify_hom(box_left_embedding(4, w), j, box).ok);
  CHECK(verify_hom(box_right_embedding(v, 3), h, box).ok);
}

TEST_CASE("non-homomorphisms are rejected") {
  const auto j = traceless_from_graph(Graph::complete(3));
  CHECK_FALSE(verify_hom(identity_map(3), j, traceless_from_graph(Graph::path(3))).ok);
  auto k = identity_map(3);
  k.kraus[0](0, 0) = 0.9;
  const auto r = verify_hom(k, traceless_from_graph(Graph(3)), traceless_from_graph(Graph(3)));
  CHECK_FALSE(r.ok);
  CHECK(r.tp_defect > 0.05);
}

TEST_CASE("minimal colouring transport through a partial trace") {
  const auto g = Graph::cycle(5);
  const auto j = traceless_from_graph(g);
  // M_2(J) -> J with two Kraus operators: the target colouring lives on M_2(J).
  const auto cert = kraus_to_isometry(partial_trace_first_map(2, 5));
  const auto source = amplify(j, 2);
  const auto big = chi0_estimate(amplify(j, 2));
  REQUIRE(big.colouring);
  const auto pulled = transport_minimal_colouring(cert, *big.colouring);
  CHECK(validate_colouring(source, pulled).ok);
  CHECK(pulled.colours() <= big.colouring->colours());
}
