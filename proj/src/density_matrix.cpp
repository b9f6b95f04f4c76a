#include "qsnn/density_matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qsnn {

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() == 0) {
    throw DimensionError("DensityMatrix: matrix must be square and nonempty");
  }
  if (!mat_.allFinite()) {
    throw ContractViolation("DensityMatrix: non-finite entries");
  }
  if (!is_hermitian(mat_, kHermitianTol)) {
    throw ContractViolation("DensityMatrix: not Hermitian within 1e-10");
  }
  const double trace_err = std::abs(mat_.trace() - Complex(1.0, 0.0));
  if (trace_err > kTraceTol) {
    throw ContractViolation("DensityMatrix: trace deviates from 1 by " +
                            std::to_string(trace_err));
  }
  const double min_eig = hermitian_eig(mat_).values.minCoeff();
  if (min_eig < -kPsdTol) {
    throw ContractViolation("DensityMatrix: negative eigenvalue " +
                            std::to_string(min_eig));
  }
}

DensityMatrix DensityMatrix::pure(const ComplexVector& ket) {
  const double norm = ket.norm();
  if (norm == 0.0) {
    throw ContractViolation("DensityMatrix::pure: zero ket");
  }
  const ComplexVector psi = ket / norm;
  return DensityMatrix(psi * psi.adjoint());
}

ComplexVector vectorize(const DensityMatrix& rho) {
  return vectorize(rho.matrix());
}

}  // namespace qsnn
