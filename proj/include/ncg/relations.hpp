#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ncg/family.hpp"
#include "ncg/graph.hpp"
#include "ncg/subspace.hpp"

namespace ncg {

/// Rank-one relations v_i v_j^* against a fixed subspace X:
///   orth(i,j) = ||P_X(v_i v_j^*)||      (zero iff v_i v_j^* is orthogonal to X)
///   memb(i,j) = ||P_{X^perp}(v_i v_j^*)|| (zero iff v_i v_j^* lies in X)
/// Vectors are normalized first; both relations are scale invariant.
struct RelationTable {
  std::size_t k = 0;
  std::vector<double> orth;
  std::vector<double> memb;
  double orth_at(std::size_t i, std::size_t j) const { return orth[i * k + j]; }
  double memb_at(std::size_t i, std::size_t j) const { return memb[i * k + j]; }
};

/// Classical graphs induced by a basis, decided at tol::edge.
struct DerivedGraphs {
  Graph distinguishability;  // G_v: i ~ j iff v_i v_j^* is orthogonal to X
  Graph confusability;       // H_v: i ~ j iff v_i v_j^* lies in X
  std::vector<bool> diagonal_orthogonal;  // v_i v_i^* orthogonal to X
  std::size_t diagonal_violations = 0;
  // Some residual fell in the guard band (tol::orth, tol::edge].
  bool marginal = false;
  double slack = 0.0;           // sum over i != j of orth(i,j)^2
  double diagonal_slack = 0.0;  // sum over i of orth(i,i)^2
};

/// Off-diagonal matrix-unit graph of a space spanned by matrix units.
struct GraphRecognition {
  Graph graph;                     // i ~ j iff E_ij lies in X
  std::vector<bool> diagonal_in;   // E_ii lies in X
  bool is_system_of_graph() const;     // X == S_G
  bool is_traceless_of_graph() const;  // X == J_G
};

class RelationOracle {
 public:
  explicit RelationOracle(MatrixSubspace space);

  const MatrixSubspace& space() const { return space_; }
  const MatrixSubspace& complement() const { return complement_; }
  std::size_t n() const { return space_.n(); }

  RelationTable table(std::span<const Vector> vecs) const;
  RelationTable table_serial(std::span<const Vector> vecs) const;
  DerivedGraphs derive(std::span<const Vector> vecs) const;

  /// Set when every matrix unit either lies in X or is orthogonal to X and
  /// the resulting relation is symmetric.
  const std::optional<GraphRecognition>& recognition() const { return recognition_; }

 private:
  MatrixSubspace space_;
  MatrixSubspace complement_;
  std::optional<GraphRecognition> recognition_;
};

Graph distinguishability_graph(const MatrixSubspace& x, const OrthonormalFamily& v);
Graph confusability_graph(const MatrixSubspace& x, const OrthonormalFamily& v);

}  // namespace ncg
