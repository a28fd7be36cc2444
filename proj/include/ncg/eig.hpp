#pragma once

#include <vector>

#include "ncg/linalg.hpp"

namespace ncg {

struct EigenDecomposition {
  std::vector<double> values;   // descending
  std::vector<Vector> vectors;  // vectors[k] belongs to values[k]
};

/// Cyclic Jacobi eigensolver for Hermitian matrices.
/// Throws InvariantError on non-Hermitian input and ConvergenceError when the
/// off-diagonal mass does not vanish within the sweep limit.
EigenDecomposition hermitian_eig(const ComplexMatrix& a);

double lambda_max(const ComplexMatrix& a);
double lambda_min(const ComplexMatrix& a);

}  // namespace ncg
