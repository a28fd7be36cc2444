#include "ncg/relations.hpp"

#include <algorithm>
#include <cmath>

#include "ncg/kernels.hpp"

namespace ncg {

namespace {

std::vector<Vector> unit_vectors(std::span<const Vector> vecs) {
  std::vector<Vector> out;
  out.reserve(vecs.size());
  for (const auto& v : vecs) out.push_back(normalized(v));
  return out;
}

std::optional<GraphRecognition> recognize(const MatrixSubspace& x, const MatrixSubspace& xperp) {
  const std::size_t n = x.n();
  // ||P_X E_ij||^2 = sum_b |b_ij|^2 since <E_ij, b> = conj(b_ij).
  auto mass = [](const MatrixSubspace& s, std::size_t i, std::size_t j) {
    double m = 0.0;
    for (const auto& b : s.basis()) m += std::norm(b(i, j));
    return std::sqrt(m);
  };
  GraphRecognition r{Graph(n), std::vector<bool>(n, false)};
  std::vector<bool> in(n * n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double inside = mass(x, i, j);
      const double outside = mass(xperp, i, j);
      if (outside <= tol::orth) in[i * n + j] = true;
      else if (inside > tol::orth) return std::nullopt;
    }
  for (std::size_t i = 0; i < n; ++i) {
    r.diagonal_in[i] = in[i * n + i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (in[i * n + j] != in[j * n + i]) return std::nullopt;
      if (in[i * n + j]) r.graph.add_edge(i, j);
    }
  }
  return r;
}

}  // namespace

bool GraphRecognition::is_system_of_graph() const {
  return std::all_of(diagonal_in.begin(), diagonal_in.end(), [](bool b) { return b; });
}

bool GraphRecognition::is_traceless_of_graph() const {
  return std::none_of(diagonal_in.begin(), diagonal_in.end(), [](bool b) { return b; });
}

RelationOracle::RelationOracle(MatrixSubspace space) : space_(std::move(space)), complement_(perp(space_)) {
  recognition_ = recognize(space_, complement_);
}

RelationTable RelationOracle::table(std::span<const Vector> vecs) const {
  const auto unit = unit_vectors(vecs);
  return {unit.size(), pair_projection_norms(space_.basis(), unit), pair_projection_norms(complement_.basis(), unit)};
}

RelationTable RelationOracle::table_serial(std::span<const Vector> vecs) const {
  const auto unit = unit_vectors(vecs);
  return {unit.size(), pair_projection_norms_serial(space_.basis(), unit),
          pair_projection_norms_serial(complement_.basis(), unit)};
}

DerivedGraphs RelationOracle::derive(std::span<const Vector> vecs) const {
  const auto t = table(vecs);
  const std::size_t k = t.k;
  DerivedGraphs d{Graph(k), Graph(k), std::vector<bool>(k, false), 0, false, 0.0, 0.0};
  auto band = [](double r) { return r > tol::orth && r <= tol::edge; };
  for (std::size_t i = 0; i < k; ++i) {
    const double dii = t.orth_at(i, i);
    d.diagonal_orthogonal[i] = dii <= tol::edge;
    if (!d.diagonal_orthogonal[i]) ++d.diagonal_violations;
    d.diagonal_slack += dii * dii;
    d.marginal = d.marginal || band(dii);
    for (std::size_t j = i + 1; j < k; ++j) {
      const double o = std::max(t.orth_at(i, j), t.orth_at(j, i));
      const double m = std::max(t.memb_at(i, j), t.memb_at(j, i));
      d.slack += t.orth_at(i, j) * t.orth_at(i, j) + t.orth_at(j, i) * t.orth_at(j, i);
      d.marginal = d.marginal || band(o) || band(m);
      if (o <= tol::edge) d.distinguishability.add_edge(i, j);
      if (m <= tol::edge) d.confusability.add_edge(i, j);
    }
  }
  return d;
}

Graph distinguishability_graph(const MatrixSubspace& x, const OrthonormalFamily& v) {
  if (v.n() != x.n()) throw DimensionError("distinguishability_graph: dimension mismatch");
  return RelationOracle(x).derive(v.vectors()).distinguishability;
}

Graph confusability_graph(const MatrixSubspace& x, const OrthonormalFamily& v) {
  if (v.n() != x.n()) throw DimensionError("confusability_graph: dimension mismatch");
  return RelationOracle(x).derive(v.vectors()).confusability;
}

}  // namespace ncg
