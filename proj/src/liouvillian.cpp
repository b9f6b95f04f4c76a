#include "qsnn/liouvillian.hpp"

#include <string>
#include <utility>

#include "qsnn/linalg.hpp"

namespace qsnn {

namespace {

const Complex kImag(0.0, 1.0);

// -i(A ox I - I ox A^T), the commutator part for Hermitian A.
ComplexMatrix commutator_superop(const ComplexMatrix& a) {
  const Index n = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  return -kImag * (kron(a, id) - kron(id, a.transpose()));
}

// L ox L^* - (L^dag L ox I + I ox L^T L^*)/2, the dissipator for one jump
// operator.
ComplexMatrix dissipator_superop(const ComplexMatrix& l) {
  const Index n = l.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix ldl = l.adjoint() * l;
  return kron(l, l.conjugate()) - 0.5 * kron(ldl, id) -
         0.5 * kron(id, ldl.transpose());
}

DensityMatrix checked_state(const ComplexMatrix& m, const char* where) {
  try {
    return DensityMatrix(m);
  } catch (const ContractViolation& e) {
    throw IntegratorFault(std::string(where) + ": " + e.what());
  }
}

}  // namespace

LiouvillianBundle assemble(const NetworkTopology& topo,
                           const ParameterVector& params, double t) {
  if (!(t > 0.0)) {
    throw ConfigError("assemble: evolution time must be positive");
  }
  const ComplexMatrix h = build_hamiltonian(topo, params);
  const std::vector<ComplexMatrix> lindblads = build_lindblad_ops(topo, params);
  const int n = topo.dim();

  LiouvillianBundle bundle;
  bundle.dim = n;
  bundle.time = t;
  bundle.generator = commutator_superop(h);
  for (const ComplexMatrix& l : lindblads) {
    bundle.generator += dissipator_superop(l);
  }

  bundle.partials.reserve(topo.hamiltonian_edges.size() +
                          topo.lindblad_edges.size());
  for (size_t k = 0; k < topo.hamiltonian_edges.size(); ++k) {
    auto [i, j] = topo.hamiltonian_edges[k];
    ComplexMatrix mu = ComplexMatrix::Zero(n, n);
    mu(i, j) = 1.0;
    mu(j, i) = 1.0;
    bundle.partials.push_back(commutator_superop(mu));
  }
  for (size_t k = 0; k < topo.lindblad_edges.size(); ++k) {
    auto [from, to] = topo.lindblad_edges[k];
    ComplexMatrix nu = ComplexMatrix::Zero(n, n);
    nu(to, from) = 1.0;
    // dL/dgamma_k = 2 gamma_k [nu ox nu^* - (nu^dag nu ox I + I ox nu^T nu^*)/2]
    bundle.partials.push_back(2.0 * params.gamma(static_cast<Index>(k)) *
                              dissipator_superop(nu));
  }
  return bundle;
}

DensityMatrix evolve(const LiouvillianBundle& bundle,
                     const DensityMatrix& rho_in) {
  if (rho_in.dim() != bundle.dim) {
    throw DimensionError("evolve: state dimension does not match bundle");
  }
  const ComplexMatrix propagator = expm(bundle.generator * bundle.time);
  const ComplexVector out = propagator * vectorize(rho_in);
  return checked_state(devectorize(out, bundle.dim), "evolve");
}

EvolutionGradients output_gradients(const LiouvillianBundle& bundle,
                                    const DensityMatrix& rho_in) {
  if (rho_in.dim() != bundle.dim) {
    throw DimensionError(
        "output_gradients: state dimension does not match bundle");
  }
  const PropagatorWithDerivatives pd = propagator_with_derivatives(bundle);
  const ComplexVector v = vectorize(rho_in);

  EvolutionGradients out{
      checked_state(devectorize(pd.propagator * v, bundle.dim),
                    "output_gradients"),
      {}};
  out.gradients.reserve(pd.derivatives.size());
  for (const ComplexMatrix& d : pd.derivatives) {
    out.gradients.push_back(devectorize(d * v, bundle.dim));
  }
  return out;
}

PropagatorWithDerivatives propagator_with_derivatives(
    const LiouvillianBundle& bundle) {
  ExpmWithDerivatives r =
      expm_frechet_batch(bundle.generator, bundle.partials, bundle.time);
  return {std::move(r.exponential), std::move(r.derivatives)};
}

}  // namespace qsnn
