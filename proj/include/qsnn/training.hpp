#pragma once

#include <cstdint>
#include <vector>

#include "qsnn/density_matrix.hpp"
#include "qsnn/liouvillian.hpp"
#include "qsnn/network.hpp"
#include "qsnn/types.hpp"

namespace qsnn {

enum class LossKind {
  weighted_discrimination,  // 1 - sum_s w_s P^s
  mean_classification,      // 1 - (1/M) sum_s P^s
};

struct LabeledSample {
  DensityMatrix rho_in;  // already encoded to the network dimension
  int label = 0;         // output-neuron index
  double weight = 0.0;   // prior w_s
};

struct TrainingConfig {
  double learning_rate = 10.0;
  int iterations = 100;
  double evolution_time = 10.0;
  std::uint64_t seed = 0;
  double init_low = 0.0;
  double init_high = 1.0;
  LossKind loss_kind = LossKind::weighted_discrimination;
};

struct IterationRecord {
  int iteration = 0;  // number of gradient steps already applied
  double loss = 0.0;
  std::vector<double> sample_success;  // P^s per sample
  double average_success = 0.0;        // weighted by the loss kind
};

struct TrainingTrace {
  std::vector<IterationRecord> records;  // iterations + 1 entries
  ParameterVector initial_params;
  ParameterVector final_params;
};

/// Tr(rho_out |label><label|), reported clamped to [0, 1].
double success_probability(const DensityMatrix& rho_out, int label);

/// Loss of a batch of evolved outputs against their samples.
double loss(const std::vector<LabeledSample>& samples,
            const std::vector<DensityMatrix>& outputs, LossKind kind);

/// Analytic dLoss/dtheta over the concatenated (h, gamma) vector.
RealVector loss_gradient(const NetworkTopology& topo,
                         const ParameterVector& params,
                         const std::vector<LabeledSample>& samples,
                         const TrainingConfig& config);

/// theta' = theta - eta * grad.
ParameterVector gd_step(const ParameterVector& params, const RealVector& grad,
                        double eta);

/// Full-batch gradient descent from a seeded uniform initialization.
/// Records loss and success probabilities before each step plus one final
/// post-update evaluation; deterministic given the seed.
TrainingTrace train(const NetworkTopology& topo,
                    const std::vector<LabeledSample>& samples,
                    const TrainingConfig& config);

}  // namespace qsnn
