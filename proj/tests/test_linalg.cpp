#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "ncg/eig.hpp"
#include "ncg/family.hpp"
#include "ncg/linalg.hpp"

using namespace ncg;

namespace {

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  const auto u = random_unitary(n, seed);
  const auto w = random_unitary(n, seed + 1);
  ComplexMatrix a = u * w;
  return 0.5 * (a + a.adjoint());
}

Eigen::MatrixXcd to_eigen(const ComplexMatrix& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

}  // namespace

TEST_CASE("kron uses the (i,k),(j,l) -> (i*m+k, j*m+l) convention") {
  const auto a = ComplexMatrix::unit(2, 0, 1);
  const auto b = ComplexMatrix::unit(3, 2, 0);
  const auto k = kron(a, b);
  CHECK(k.rows() == 6);
  CHECK(k(0 * 3 + 2, 1 * 3 + 0) == cplx(1.0));
  CHECK(k.hs_norm() == doctest::Approx(1.0));
  const Vector x{1.0, 2.0}, y{0.0, 1.0, cplx(0, 1)};
  const auto xy = kron(x, y);
  CHECK(xy[1 * 3 + 2] == cplx(0, 2));
}

TEST_CASE("hs_inner is conjugate-linear in the second slot") {
  const auto a = random_unitary(3, 5);
  const auto b = random_unitary(3, 6);
  const cplx s(0.3, -1.2);
  CHECK(std::abs(hs_inner(a, s * b) - std::conj(s) * hs_inner(a, b)) < 1e-12);
  CHECK(std::abs(hs_inner(a, b) - (b.adjoint() * a).trace()) < 1e-12);
}

TEST_CASE("Jacobi eigenvalues agree with Eigen's solver") {
  for (std::size_t n : {1u, 2u, 5u, 9u, 16u}) {
    const auto h = random_hermitian(n, 100 + n);
    const auto ours = hermitian_eig(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(to_eigen(h));
    std::vector<double> theirs(ref.eigenvalues().data(), ref.eigenvalues().data() + n);
    std::sort(theirs.rbegin(), theirs.rend());
    for (std::size_t k = 0; k < n; ++k) CHECK(ours.values[k] == doctest::Approx(theirs[k]).epsilon(1e-10));
    for (std::size_t k = 0; k < n; ++k) {
      const auto hv = h * ours.vectors[k];
      double r = 0.0;
      for (std::size_t i = 0; i < n; ++i) r = std::max(r, std::abs(hv[i] - ours.values[k] * ours.vectors[k][i]));
      CHECK(r < 1e-10);
    }
    CHECK(gram_defect(ours.vectors) < 1e-12);
  }
}

TEST_CASE("lambda_max and lambda_min of a diagonal matrix") {
  const double d[] = {3.0, -2.0, 0.5};
  const auto a = ComplexMatrix::diagonal(d);
  CHECK(lambda_max(a) == doctest::Approx(3.0));
  CHECK(lambda_min(a) == doctest::Approx(-2.0));
}

TEST_CASE("random_unitary is unitary and seeded") {
  const auto u = random_unitary(7, 42);
  CHECK(isometry_defect(u) < 1e-12);
  CHECK(random_unitary(7, 42) == u);
  CHECK(max_abs_diff(random_unitary(7, 43), u) > 1e-3);
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
}

TEST_CASE("Fourier and standard bases are orthonormal") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(gram_defect(fourier_basis(n)) < 1e-13);
    CHECK(normalized_abs_det(fourier_basis(n)) == doctest::Approx(1.0));
    CHECK(OrthonormalFamily::fourier(n).is_full());
  }
  CHECK_THROWS_AS(OrthonormalFamily(2, {Vector{1.0, 0.0}, Vector{1.0, 0.0}}), InvariantError);
}

TEST_CASE("normalized_abs_det detects dependence") {
  std::vector<Vector> v{{1.0, 0.0}, {1.0, 1e-12}};
  CHECK(normalized_abs_det(v) < 1e-10);
}

TEST_CASE("Cholesky factor reproduces the matrix and rejects indefinite input") {
  const auto h = random_hermitian(5, 9);
  ComplexMatrix pd = h * h + ComplexMatrix::identity(5);
  ComplexMatrix l;
  REQUIRE(cholesky(pd, l));
  CHECK(max_abs_diff(l * l.adjoint(), pd) < 1e-12);
  const double d[] = {1.0, -1.0};
  CHECK_FALSE(cholesky(ComplexMatrix::diagonal(d), l));

  std::vector<double> a{4, 2, 2, 3}, rhs{2, 1};
  REQUIRE(cholesky_solve(a, 2, rhs));
  CHECK(rhs[0] == doctest::Approx(0.5));
  CHECK(rhs[1] == doctest::Approx(0.0));
}

TEST_CASE("is_hermitian respects its tolerance") {
  auto a = random_hermitian(4, 3);
  CHECK(is_hermitian(a));
  a(0, 1) += 1e-6;
  CHECK_FALSE(is_hermitian(a));
}
