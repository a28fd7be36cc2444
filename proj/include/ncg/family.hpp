#pragma once

#include <vector>

#include "ncg/linalg.hpp"

namespace ncg {

/// Ordered orthonormal tuple of k <= n vectors in C^n. The Gram matrix is
/// checked against the identity (entrywise, tol::orth) on construction.
class OrthonormalFamily {
 public:
  OrthonormalFamily() = default;
  OrthonormalFamily(std::size_t n, std::vector<Vector> vectors);

  static OrthonormalFamily standard(std::size_t n);
  static OrthonormalFamily fourier(std::size_t n);
  /// Columns of a unitary matrix.
  static OrthonormalFamily columns_of(const ComplexMatrix& u);

  std::size_t n() const { return n_; }
  std::size_t size() const { return vectors_.size(); }
  bool is_full() const { return vectors_.size() == n_; }
  const std::vector<Vector>& vectors() const { return vectors_; }
  const Vector& operator[](std::size_t i) const { return vectors_[i]; }

  OrthonormalFamily subset(const std::vector<std::size_t>& indices) const;

 private:
  std::size_t n_ = 0;
  std::vector<Vector> vectors_;
};

/// max_{i,j} |<v_i, v_j> - delta_ij|
double gram_defect(const std::vector<Vector>& vectors);

}  // namespace ncg
