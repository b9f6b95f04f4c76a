#include "qsnn/tasks.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qsnn/linalg.hpp"

namespace qsnn {

namespace {

const Complex kImag(0.0, 1.0);

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, -kImag, kImag, 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

void require_unitary(const ComplexMatrix& u, const char* name) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw DimensionError(std::string(name) + ": expected a 2x2 unitary");
  }
  const ComplexMatrix delta =
      u.adjoint() * u - ComplexMatrix::Identity(2, 2);
  if (delta.cwiseAbs().maxCoeff() > 1e-10) {
    throw ContractViolation(std::string(name) + ": matrix is not unitary");
  }
}

}  // namespace

DensityMatrix pure_state_real(double theta) {
  ComplexVector ket(2);
  ket << std::cos(theta), std::sin(theta);
  return DensityMatrix::pure(ket);
}

DensityMatrix pure_state_complex(double phi) {
  ComplexVector ket(2);
  ket << 1.0, std::exp(kImag * phi);
  return DensityMatrix::pure(ket);
}

DensityMatrix bloch_mixed_state(double theta, double phi, double r) {
  if (r < 0.0 || r > 1.0) {
    throw ContractViolation("bloch_mixed_state: radius outside [0, 1]");
  }
  const ComplexMatrix m =
      0.5 * ComplexMatrix::Identity(2, 2) +
      0.5 * r *
          (std::sin(theta) * std::cos(phi) * pauli_x() +
           std::sin(theta) * std::sin(phi) * pauli_y() +
           std::cos(theta) * pauli_z());
  return DensityMatrix(m);
}

DensityMatrix multi_state_real(int m, int s) {
  if (s < 1 || s > m) {
    throw ContractViolation("multi_state_real: index out of range");
  }
  return pure_state_real(2.0 * std::numbers::pi * s / m);
}

DensityMatrix multi_state_complex(int m, int s) {
  if (s < 1 || s > m) {
    throw ContractViolation("multi_state_complex: index out of range");
  }
  return pure_state_complex(2.0 * std::numbers::pi * s / m);
}

DensityMatrix ghz_state() {
  ComplexVector ket = ComplexVector::Zero(8);
  ket(0) = 1.0;
  ket(7) = 1.0;
  return DensityMatrix::pure(ket);
}

DensityMatrix w_state() {
  ComplexVector ket = ComplexVector::Zero(8);
  ket(1) = 1.0;
  ket(2) = 1.0;
  ket(4) = 1.0;
  return DensityMatrix::pure(ket);
}

DensityMatrix werner_like(double p, const ComplexMatrix& u1,
                          const ComplexMatrix& u2) {
  if (p < 0.0 || p > 1.0) {
    throw ContractViolation("werner_like: p outside [0, 1]");
  }
  require_unitary(u1, "werner_like: u1");
  require_unitary(u2, "werner_like: u2");
  ComplexVector psi_plus = ComplexVector::Zero(4);
  psi_plus(1) = 1.0 / std::numbers::sqrt2;  // |01>
  psi_plus(2) = 1.0 / std::numbers::sqrt2;  // |10>
  const ComplexVector psi = kron(u1, u2) * psi_plus;
  const ComplexMatrix m = p * (psi * psi.adjoint()) +
                          (1.0 - p) * 0.25 * ComplexMatrix::Identity(4, 4);
  return DensityMatrix(m);
}

EntanglementClass entanglement_label(double p) {
  if (p < 0.0 || p > 1.0) {
    throw ContractViolation("entanglement_label: p outside [0, 1]");
  }
  return p <= 1.0 / 3.0 ? EntanglementClass::separable
                        : EntanglementClass::entangled;
}

double helstrom_success(const DensityMatrix& rho1, const DensityMatrix& rho2,
                        double w1, double w2) {
  if (rho1.dim() != rho2.dim()) {
    throw DimensionError("helstrom_success: state dimension mismatch");
  }
  if (std::abs(w1 + w2 - 1.0) > 1e-12) {
    throw ContractViolation("helstrom_success: priors must sum to 1");
  }
  const double tn =
      trace_norm_hermitian(w2 * rho2.matrix() - w1 * rho1.matrix());
  return 1.0 - 0.5 * (1.0 - tn);
}

std::vector<LabeledSample> binary_training_set(const DensityMatrix& state1,
                                               const DensityMatrix& state2,
                                               const NetworkTopology& topo,
                                               double w1, double w2) {
  const int n = topo.dim();
  const int first_output = topo.output_offset();
  return {
      {encode_input(state1, n), first_output, w1},
      {encode_input(state2, n), first_output + 1, w2},
  };
}

WernerSets build_werner_sets(const NetworkTopology& topo,
                             const ComplexMatrix& u1,
                             const ComplexMatrix& u2) {
  const int n = topo.dim();
  const int label_separable = topo.output_offset();
  const int label_entangled = label_separable + 1;

  WernerSets sets;
  const double train_p[] = {0.0, 0.2, 0.4, 0.8};
  for (double p : train_p) {
    const int label = entanglement_label(p) == EntanglementClass::separable
                          ? label_separable
                          : label_entangled;
    sets.train.push_back({encode_input(werner_like(p, u1, u2), n), label,
                          0.25});
  }
  for (int k = 1; k <= 49; ++k) {
    const double p = 0.02 * k;
    sets.test.push_back({p, werner_like(p, u1, u2), entanglement_label(p)});
  }
  return sets;
}

std::pair<DensityMatrix, DensityMatrix> random_bloch_pair(double r,
                                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw = [&] {
    // Uniform on the sphere: cos(theta) uniform in [-1, 1], phi uniform.
    const double cos_theta = 2.0 * unit(rng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    return bloch_mixed_state(std::acos(cos_theta), phi, r);
  };
  DensityMatrix first = draw();
  DensityMatrix second = draw();
  return {std::move(first), std::move(second)};
}

}  // namespace qsnn
