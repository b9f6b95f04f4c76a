#pragma once

#include <utility>
#include <vector>

#include "qsnn/types.hpp"

namespace qsnn {

/// Kronecker product, (kron)_{(i*rb+k),(j*cb+l)} = a_{ij} b_{kl}.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Row-major vectorization: entry (i*n + j) of the result is m_{ij}.
ComplexVector vectorize(const ComplexMatrix& m);

/// Inverse of vectorize. v must have length n*n.
ComplexMatrix devectorize(const ComplexVector& v, Index n);

/// True when max |a - a^dagger| <= tol.
bool is_hermitian(const ComplexMatrix& a, double tol);

struct Eigensystem {
  RealVector values;       // ascending
  ComplexMatrix vectors;   // columns, unitary
};

/// Eigendecomposition of a Hermitian matrix, a = V diag(values) V^dagger.
/// Throws ContractViolation when a is not Hermitian within 1e-10.
Eigensystem hermitian_eig(const ComplexMatrix& a);

/// Sum of |eigenvalue| over the spectrum of a Hermitian matrix.
double trace_norm_hermitian(const ComplexMatrix& a);

/// Matrix exponential via scaling-and-squaring with a degree-13 Pade
/// approximant.
ComplexMatrix expm(const ComplexMatrix& a);

struct ExpmWithDerivative {
  ComplexMatrix exponential;  // expm(a*t)
  ComplexMatrix derivative;   // int_0^t expm(a*(t-s)) e expm(a*s) ds
};

/// Exponential of a*t together with its directional derivative along e,
/// obtained from the exponential of the augmented block [[a, e], [0, a]]*t:
/// the diagonal blocks carry expm(a*t) and the upper-right block the
/// derivative integral.
ExpmWithDerivative expm_frechet(const ComplexMatrix& a, const ComplexMatrix& e,
                                double t);

struct ExpmWithDerivatives {
  ComplexMatrix exponential;
  std::vector<ComplexMatrix> derivatives;  // one per direction
};

/// Same derivative as expm_frechet for every direction at once. The Pade
/// powers, the denominator factorization, and the squaring iterates of a*t
/// are computed once and shared across directions, so the cost per
/// direction is a handful of n-dim products instead of a 2n-dim
/// exponential. Agrees with expm_frechet to machine precision.
ExpmWithDerivatives expm_frechet_batch(const ComplexMatrix& a,
                                       const std::vector<ComplexMatrix>& dirs,
                                       double t);

}  // namespace qsnn
