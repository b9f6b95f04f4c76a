#pragma once

#include <vector>

#include "qsnn/density_matrix.hpp"
#include "qsnn/network.hpp"
#include "qsnn/types.hpp"

namespace qsnn {

/// Vectorized generator of the network dynamics together with its partial
/// derivatives with respect to every trainable parameter (h block first,
/// then gamma, in edge order) and the fixed evolution time.
struct LiouvillianBundle {
  Index dim = 0;                        // N, so the generator is N^2 x N^2
  ComplexMatrix generator;              // L
  std::vector<ComplexMatrix> partials;  // dL/dtheta_k
  double time = 0.0;                    // T
};

/// L = -i(H ox I - I ox H^T)
///     + sum_k [ L_k ox L_k^* - (L_k^dag L_k ox I + I ox L_k^T L_k^*)/2 ]
/// with the matching analytic partials.
LiouvillianBundle assemble(const NetworkTopology& topo,
                           const ParameterVector& params, double t);

/// rho_out = devectorize(expm(L*T) vectorize(rho_in)). Throws
/// IntegratorFault when the result fails the density-matrix invariants.
DensityMatrix evolve(const LiouvillianBundle& bundle,
                     const DensityMatrix& rho_in);

struct EvolutionGradients {
  DensityMatrix rho_out;
  std::vector<ComplexMatrix> gradients;  // d rho_out / d theta_k
};

/// Evolved state plus the exact derivative of the output state along every
/// parameter; each gradient matrix is Hermitian and traceless.
EvolutionGradients output_gradients(const LiouvillianBundle& bundle,
                                    const DensityMatrix& rho_in);

struct PropagatorWithDerivatives {
  ComplexMatrix propagator;                // expm(L*T)
  std::vector<ComplexMatrix> derivatives;  // d expm(L*T) / d theta_k
};

/// Sample-independent propagator and its parameter derivatives; applying
/// them to vectorized inputs reproduces evolve/output_gradients for every
/// sample without re-exponentiating per sample.
PropagatorWithDerivatives propagator_with_derivatives(
    const LiouvillianBundle& bundle);

}  // namespace qsnn
