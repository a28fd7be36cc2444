#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ncg/eig.hpp"
#include "ncg/ncgraph.hpp"
#include "ncg/sdp.hpp"
#include "ncg/theta.hpp"

using namespace ncg;

namespace {

Graph from_edges(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> e) {
  for (auto& [i, j] : e) --i, --j;
  return Graph(n, e);
}

double odd_cycle_theta(double n) { return n * std::cos(std::numbers::pi / n) / (1 + std::cos(std::numbers::pi / n)); }

}  // namespace

TEST_CASE("classical theta closed forms") {
  CHECK(theta_classical(Graph::cycle(5)) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-7));
  CHECK(theta_classical(Graph::cycle(7)) == doctest::Approx(odd_cycle_theta(7)).epsilon(1e-7));
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(std::abs(theta_classical(Graph::complete(n)) - 1.0) < 1e-6);
    CHECK(std::abs(theta_classical(Graph(n)) - static_cast<double>(n)) < 1e-6);
  }
}

TEST_CASE("classical theta matches values from an independent SDP solver") {
  // Reference values: the trace-one B >= 0, B_ij = 0 on edges, max sum(B)
  // formulation solved by a separate conic solver.
  struct Ref {
    std::size_t n;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    double theta;
  };
  const Ref refs[] = {
      {10, {{1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 8}, {4, 5}, {4, 9}, {5, 10}, {6, 8}, {6, 9}, {7, 9},
            {7, 10}, {8, 10}}, 4.0},
      {6, {{1, 2}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 6}, {5, 6}}, 2.236067978},
      {8, {{1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 6}, {2, 7}, {2, 8}, {3, 5}, {3, 6}, {4, 8}, {5, 6}, {6, 8}},
       3.196557594},
      {7, {{1, 2}, {1, 4}, {1, 7}, {2, 6}, {3, 4}, {4, 5}, {5, 6}, {5, 7}}, 3.236067978},
      {8, {{1, 7}, {2, 5}, {2, 6}, {2, 7}, {3, 7}, {5, 6}, {5, 7}, {7, 8}}, 5.0},
  };
  for (const auto& r : refs) CHECK(theta_classical(from_edges(r.n, r.edges)) == doctest::Approx(r.theta).epsilon(1e-6));
}

TEST_CASE("SDP solver on a one-variable problem") {
  // maximize x subject to I - x A >= 0: optimum 1 / lambda_max(A).
  const double d[] = {2.0, 0.5, -1.0};
  SdpProblem p;
  p.m = 1;
  p.c = {1.0};
  p.f0 = ComplexMatrix::identity(3);
  p.f = {-1.0 * ComplexMatrix::diagonal(d)};
  const auto s = solve_sdp(p);
  CHECK(s.status == SdpStatus::optimal);
  CHECK(s.value == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(s.gap < 1e-7);
}

TEST_CASE("SDP solver detects unbounded and infeasible problems") {
  SdpProblem unb;
  unb.m = 1;
  unb.c = {1.0};
  unb.f0 = ComplexMatrix::identity(2);
  unb.f = {ComplexMatrix::identity(2)};
  CHECK(solve_sdp(unb).status == SdpStatus::unbounded);

  // -I + 0 x >= 0 has no solution.
  SdpProblem inf;
  inf.m = 1;
  inf.c = {1.0};
  inf.f0 = -1.0 * ComplexMatrix::identity(2);
  inf.f = {ComplexMatrix::unit(2, 0, 0) - ComplexMatrix::unit(2, 1, 1)};
  CHECK(solve_sdp(inf).status == SdpStatus::infeasible);

  SdpProblem bad = unb;
  bad.f = {ComplexMatrix::unit(2, 0, 1)};
  CHECK_THROWS(validate(bad));
}

TEST_CASE("theta of graph systems equals the classical number") {
  const auto s = system_from_graph(Graph::cycle(5));
  const auto b = theta_system(s);
  CHECK(b.exact);
  CHECK(b.lower == doctest::Approx(std::sqrt(5.0)).epsilon(1e-6));
  CHECK(validate_theta_witness(b, perp(s)).ok);
  const auto bb = theta_bar(traceless_from_graph(Graph::cycle(5)));
  CHECK(bb.upper == doctest::Approx(std::sqrt(5.0)).epsilon(1e-6));
}

TEST_CASE("theta of the full matrix system is 1 and of the trivial system is n") {
  const auto full = theta_system(MatrixSubspace::full(3));
  CHECK(full.exact);
  CHECK(full.lower == 1);
  CHECK(full.upper == 1);
  const std::vector<ComplexMatrix> id{ComplexMatrix::identity(3)};
  const auto triv = theta_system(span(id, 3, SpaceKind::system));
  CHECK(triv.upper == doctest::Approx(3.0));
  CHECK(triv.lower > 3.0 - 1e-6);
}

TEST_CASE("theta-bar of span{Delta} is n") {
  for (std::size_t n = 3; n <= 5; ++n) {
    std::vector<double> d(n, -1.0);
    d[0] = static_cast<double>(n) - 1.0;
    const std::vector<ComplexMatrix> gens{ComplexMatrix::diagonal(d)};
    const auto j = span(gens, n, SpaceKind::traceless);
    const auto b = theta_bar(j);
    CHECK(b.lower >= static_cast<double>(n) - 1e-4);
    CHECK(b.upper <= static_cast<double>(n) + 1e-9);
    CHECK(validate_theta_witness(b, j).ok);
  }
}

TEST_CASE("theta witness validation rejects bad witnesses") {
  const auto s = system_from_graph(Graph::cycle(5));
  auto b = theta_system(s);
  auto off = b;
  off.witness_t(0, 1) += 0.1;
  CHECK_FALSE(validate_theta_witness(off, perp(s)).ok);
  auto big = b;
  big.lower += 0.5;
  CHECK_FALSE(validate_theta_witness(big, perp(s)).ok);
}

TEST_CASE("theta brackets are monotone under amplification") {
  const auto s = system_from_graph(Graph::path(3));
  const auto t1 = theta_d(s, 1, false);
  const auto t2 = theta_d(s, 2, false);
  CHECK(t2.upper >= t1.lower - 1e-6);
}

TEST_CASE("theta on unitary copies brackets the classical value") {
  const auto s = conjugate(system_from_graph(Graph::cycle(5)), random_unitary(5, 3));
  ThetaOptions o;
  o.budget = 16;
  const auto b = theta_system(s, o);
  CHECK(b.lower <= std::sqrt(5.0) + 1e-6);
  CHECK(b.upper >= std::sqrt(5.0) - 1e-6);
  CHECK(validate_theta_witness(b, perp(s)).ok);
}
