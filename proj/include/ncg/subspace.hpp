#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncg/linalg.hpp"

namespace ncg {

enum class SpaceKind { system, traceless, plain };

std::string_view to_string(SpaceKind kind);
SpaceKind space_kind_from_string(std::string_view s);

/// A linear subspace of M_n held as an HS-orthonormal basis.
///
/// kind == system    : contains I and is closed under adjoint.
/// kind == traceless : every element has zero trace and the span is closed
///                     under adjoint.
/// The invariants are checked once, at construction through span().
class MatrixSubspace {
 public:
  MatrixSubspace() = default;

  static MatrixSubspace zero(std::size_t n, SpaceKind kind = SpaceKind::traceless);
  static MatrixSubspace full(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  SpaceKind kind() const { return kind_; }
  const std::vector<ComplexMatrix>& basis() const { return basis_; }

  /// <x, b_k> for each basis element.
  std::vector<cplx> coefficients(const ComplexMatrix& x) const;
  ComplexMatrix project(const ComplexMatrix& x) const;
  /// ||project(x)||_HS, computed from the coefficients.
  double projection_norm(const ComplexMatrix& x) const;
  /// ||x - project(x)||_HS, computed explicitly.
  double residual(const ComplexMatrix& x) const;

  /// Reports the first violated kind invariant, or an empty string.
  std::string kind_violation() const;

 private:
  friend MatrixSubspace span(std::span<const ComplexMatrix>, std::size_t, SpaceKind);
  friend MatrixSubspace perp(const MatrixSubspace&);
  MatrixSubspace(std::size_t n, SpaceKind kind, std::vector<ComplexMatrix> basis)
      : n_(n), kind_(kind), basis_(std::move(basis)) {}

  std::size_t n_ = 0;
  SpaceKind kind_ = SpaceKind::plain;
  std::vector<ComplexMatrix> basis_;
};

/// Modified Gram-Schmidt (with one re-orthogonalization pass) under the HS
/// inner product. Generators whose residual falls below tol::rank relative to
/// the largest generator norm are dropped. Throws InvariantError when `kind`
/// invariants fail and DimensionError on mixed dimensions.
MatrixSubspace span(std::span<const ComplexMatrix> mats, SpaceKind kind);
MatrixSubspace span(std::span<const ComplexMatrix> mats, std::size_t n, SpaceKind kind);

ComplexMatrix project(const ComplexMatrix& x, const MatrixSubspace& v);

/// Orthogonal complement inside M_n. system <-> traceless, plain -> plain.
MatrixSubspace perp(const MatrixSubspace& v);

/// span{a_k (x) b_l}; dim is the product of dims.
MatrixSubspace tensor(const MatrixSubspace& a, const MatrixSubspace& b);

/// Max over both bases of the residual of projecting one basis onto the other
/// space; +inf when the dimensions disagree.
double subspace_distance(const MatrixSubspace& a, const MatrixSubspace& b);
bool subspace_equal(const MatrixSubspace& a, const MatrixSubspace& b, double tolerance = 1e-8);

/// Real-linear orthonormal basis (w.r.t. Re<.,.>) of the Hermitian elements of
/// an adjoint-closed subspace. Its real dimension equals the complex dim.
std::vector<ComplexMatrix> hermitian_basis(const MatrixSubspace& v);

}  // namespace ncg
