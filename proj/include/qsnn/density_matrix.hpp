#pragma once

#include "qsnn/linalg.hpp"
#include "qsnn/types.hpp"

namespace qsnn {

/// Validated quantum state: Hermitian within 1e-10, unit trace within 1e-9,
/// positive semidefinite down to -1e-9. Immutable after construction.
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-10;
  static constexpr double kTraceTol = 1e-9;
  static constexpr double kPsdTol = 1e-9;

  /// Throws ContractViolation when any invariant fails.
  explicit DensityMatrix(ComplexMatrix m);

  /// Projector |ket><ket| from a normalized or unnormalized ket.
  static DensityMatrix pure(const ComplexVector& ket);

  Index dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }

  /// Real part of the diagonal entry (i, i).
  double population(Index i) const { return mat_(i, i).real(); }

 private:
  ComplexMatrix mat_;
};

ComplexVector vectorize(const DensityMatrix& rho);

}  // namespace qsnn
