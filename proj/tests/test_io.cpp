#include "doctest.h"
#include "ncg/io.hpp"
#include "ncg/ncgraph.hpp"

using namespace ncg;

TEST_CASE("matrix JSON round trip, square and rectangular") {
  const auto u = random_unitary(3, 1);
  CHECK(matrix_from_json(to_json(u)) == u);
  ComplexMatrix r(2, 3);
  r(1, 2) = cplx(0.5, -2);
  const auto j = to_json(r);
  CHECK(j.at("rows") == 2);
  CHECK(matrix_from_json(j) == r);
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"n":2,"data":[[1,0]]})")), ParseError);
}

TEST_CASE("subspace JSON round trip") {
  const auto s = conjugate(system_from_graph(Graph::cycle(4)), random_unitary(4, 2));
  const auto back = subspace_from_json(parse_json(to_json(s).dump()));
  CHECK(back.kind() == SpaceKind::system);
  CHECK(subspace_equal(back, s));
  const auto z = subspace_from_json(parse_json(R"({"n":3,"kind":"traceless","spanning":[]})"));
  CHECK(z.dim() == 0);
  CHECK_THROWS_AS(subspace_from_json(parse_json(R"({"n":2,"kind":"system","spanning":[]})")), InvariantError);
  CHECK_THROWS_AS(subspace_from_json(parse_json(R"({"n":2,"kind":"weird","spanning":[]})")), ParseError);
}

TEST_CASE("graph and colouring JSON use 1-based indices") {
  const auto g = Graph::path(3);
  const auto j = to_json(g);
  CHECK(j.at("edges")[0] == json::array({1, 2}));
  CHECK(graph_from_json(j) == g);
  const auto c = colouring_from_labels(standard_basis(3), {0, 1, 0}, ColouringMode::strong);
  const auto cj = to_json(c);
  CHECK(cj.at("parts")[0] == json::array({1, 3}));
  const auto back = colouring_from_json(cj);
  CHECK(back.parts == c.parts);
  CHECK(back.mode == ColouringMode::strong);
}

TEST_CASE("estimates encode infinity as null") {
  ParameterEstimate e;
  e.name = "chi";
  e.lower = 2;
  e.upper = kInf;
  const auto j = to_json(e);
  CHECK(j.at("upper").is_null());
  CHECK(j.at("lower") == 2);
  CHECK(number(2.5) == 2.5);
}

TEST_CASE("certificates round trip in both forms") {
  const auto k = partial_trace_first_map(2, 3);
  const auto a = certificate_from_json(parse_json(to_json(k).dump()));
  const auto b = certificate_from_json(parse_json(to_json(kraus_to_isometry(k)).dump()));
  REQUIRE(a.kraus.size() == 2);
  REQUIRE(b.kraus.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(a.kraus[i] == k.kraus[i]);
    CHECK(max_abs_diff(b.kraus[i], k.kraus[i]) < 1e-15);
  }
}

TEST_CASE("SDP problem JSON round trip") {
  SdpProblem p;
  p.m = 1;
  p.c = {1.0};
  p.f0 = ComplexMatrix::identity(2);
  p.f = {ComplexMatrix::unit(2, 0, 0)};
  const auto q = sdp_problem_from_json(parse_json(to_json(p).dump()));
  CHECK(q.m == 1);
  CHECK(q.f0 == p.f0);
  CHECK(q.f[0] == p.f[0]);
}

TEST_CASE("malformed JSON is a parse error") {
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(read_file("/nonexistent/file"), ParseError);
}
