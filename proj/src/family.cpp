#include "ncg/family.hpp"

#include <algorithm>

namespace ncg {

double gram_defect(const std::vector<Vector>& vectors) {
  double worst = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      const cplx g = vdot(vectors[i], vectors[j]);
      worst = std::max(worst, std::abs(g - (i == j ? cplx(1.0) : cplx(0.0))));
    }
  return worst;
}

OrthonormalFamily::OrthonormalFamily(std::size_t n, std::vector<Vector> vectors)
    : n_(n), vectors_(std::move(vectors)) {
  if (vectors_.size() > n_) throw DimensionError("orthonormal family has more than n vectors");
  for (const auto& v : vectors_)
    if (v.size() != n_) throw DimensionError("orthonormal family: vector of wrong length");
  if (gram_defect(vectors_) > tol::orth) throw InvariantError("family is not orthonormal");
}

OrthonormalFamily OrthonormalFamily::standard(std::size_t n) { return {n, standard_basis(n)}; }

OrthonormalFamily OrthonormalFamily::fourier(std::size_t n) { return {n, fourier_basis(n)}; }

OrthonormalFamily OrthonormalFamily::columns_of(const ComplexMatrix& u) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < u.cols(); ++j) cols.push_back(u.column(j));
  return {u.rows(), std::move(cols)};
}

OrthonormalFamily OrthonormalFamily::subset(const std::vector<std::size_t>& indices) const {
  std::vector<Vector> out;
  for (const auto i : indices) out.push_back(vectors_.at(i));
  return {n_, std::move(out)};
}

}  // namespace ncg
