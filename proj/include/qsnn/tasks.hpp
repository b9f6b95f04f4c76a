#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qsnn/density_matrix.hpp"
#include "qsnn/network.hpp"
#include "qsnn/training.hpp"
#include "qsnn/types.hpp"

namespace qsnn {

/// cos(theta)|0> + sin(theta)|1>, projector.
DensityMatrix pure_state_real(double theta);

/// (|0> + e^{i phi}|1>)/sqrt(2), projector.
DensityMatrix pure_state_complex(double phi);

/// Bloch-sphere state I/2 + (r/2)(sin t cos p X + sin t sin p Y + cos t Z).
DensityMatrix bloch_mixed_state(double theta, double phi, double r);

/// s-th of M real-amplitude states, angle 2 pi s / M, 1 <= s <= M.
DensityMatrix multi_state_real(int m, int s);

/// s-th of M equal-weight states with relative phase e^{i 2 pi s / M}.
DensityMatrix multi_state_complex(int m, int s);

/// (|000> + |111>)/sqrt(2), basis |b2 b1 b0> -> 4 b2 + 2 b1 + b0.
DensityMatrix ghz_state();

/// (|001> + |010> + |100>)/sqrt(3), same basis ordering.
DensityMatrix w_state();

/// p |Psi><Psi| + (1-p) I/4 with |Psi> = (u1 ox u2)(|01> + |10>)/sqrt(2).
DensityMatrix werner_like(double p, const ComplexMatrix& u1,
                          const ComplexMatrix& u2);

enum class EntanglementClass { separable, entangled };

/// Separable iff p <= 1/3.
EntanglementClass entanglement_label(double p);

/// Optimal success probability of binary discrimination,
/// 1 - (1 - ||w2 rho2 - w1 rho1||_tr) / 2.
double helstrom_success(const DensityMatrix& rho1, const DensityMatrix& rho2,
                        double w1, double w2);

/// Two-sample discrimination set encoded to the network dimension; state 1
/// maps to the first output neuron, state 2 to the second.
std::vector<LabeledSample> binary_training_set(const DensityMatrix& state1,
                                               const DensityMatrix& state2,
                                               const NetworkTopology& topo,
                                               double w1 = 0.5,
                                               double w2 = 0.5);

struct WernerSample {
  double p = 0.0;
  DensityMatrix state;
  EntanglementClass truth = EntanglementClass::separable;
};

struct WernerSets {
  std::vector<LabeledSample> train;  // labels: separable -> first output
  std::vector<WernerSample> test;    // raw 4-dim states, not yet encoded
};

/// Four training samples at p in {0, 0.2, 0.4, 0.8} plus the 49-state test
/// grid p = 0.02 n, n = 1..49.
WernerSets build_werner_sets(const NetworkTopology& topo,
                             const ComplexMatrix& u1, const ComplexMatrix& u2);

/// Seeded pair of independent uniformly random states on the Bloch sphere
/// surface of radius r.
std::pair<DensityMatrix, DensityMatrix> random_bloch_pair(double r,
                                                          std::uint64_t seed);

}  // namespace qsnn
