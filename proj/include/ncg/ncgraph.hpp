#pragma once

#include "ncg/family.hpp"
#include "ncg/graph.hpp"
#include "ncg/subspace.hpp"

namespace ncg {

/// S_G = span{E_ij : i ~ j or i = j}; dim n + 2|E|.
MatrixSubspace system_from_graph(const Graph& g);
/// J_G = span{E_ij : i ~ j}; dim 2|E|.
MatrixSubspace traceless_from_graph(const Graph& g);

/// span{u b u^*}. Throws InvariantError when u is not unitary.
MatrixSubspace conjugate(const MatrixSubspace& v, const ComplexMatrix& u);

/// M_d(v) realized as span{E_kl (x) b}: ambient dimension d*n, d^2*dim(v).
MatrixSubspace amplify(const MatrixSubspace& v, std::size_t d);

/// D_x = span{x_i x_i^*} for a full orthonormal basis x.
MatrixSubspace diagonal_span(const OrthonormalFamily& x);

/// (J [] K)_{v,w} = J (x) D_w + D_v (x) K, re-orthonormalized.
MatrixSubspace box_product(const MatrixSubspace& j, const MatrixSubspace& k, const OrthonormalFamily& v,
                           const OrthonormalFamily& w);

/// Permutation matrix P with P e_i = e_{sigma(i)}.
ComplexMatrix permutation_matrix(const std::vector<std::size_t>& sigma);

}  // namespace ncg
