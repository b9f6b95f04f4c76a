#include "qsnn/training.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "qsnn/linalg.hpp"

namespace qsnn {

namespace {

double sample_weight(const std::vector<LabeledSample>& samples, size_t s,
                     LossKind kind) {
  if (kind == LossKind::mean_classification) {
    return 1.0 / static_cast<double>(samples.size());
  }
  return samples[s].weight;
}

// Evaluation of one parameter point: outputs, record fields, and (when
// requested) the analytic gradient, all from a single propagator
// computation.
struct Evaluation {
  IterationRecord record;
  RealVector gradient;
};

Evaluation evaluate(const NetworkTopology& topo, const ParameterVector& params,
                    const std::vector<LabeledSample>& samples,
                    const TrainingConfig& config, int iteration,
                    bool with_gradient) {
  const LiouvillianBundle bundle =
      assemble(topo, params, config.evolution_time);

  ComplexMatrix propagator;
  std::vector<ComplexMatrix> derivatives;
  if (with_gradient) {
    PropagatorWithDerivatives pd = propagator_with_derivatives(bundle);
    propagator = std::move(pd.propagator);
    derivatives = std::move(pd.derivatives);
  } else {
    propagator = expm(bundle.generator * bundle.time);
  }

  Evaluation ev;
  ev.record.iteration = iteration;
  if (with_gradient) {
    ev.gradient = RealVector::Zero(static_cast<Index>(derivatives.size()));
  }

  double avg = 0.0;
  for (size_t s = 0; s < samples.size(); ++s) {
    const ComplexVector v = vectorize(samples[s].rho_in);
    const ComplexVector out_v = propagator * v;
    DensityMatrix rho_out = [&] {
      try {
        return DensityMatrix(devectorize(out_v, bundle.dim));
      } catch (const ContractViolation& e) {
        throw IntegratorFault(std::string("train: sample ") +
                              std::to_string(s) + ": " + e.what());
      }
    }();
    const double p = success_probability(rho_out, samples[s].label);
    const double w = sample_weight(samples, s, config.loss_kind);
    ev.record.sample_success.push_back(p);
    avg += w * p;
    if (with_gradient) {
      const Index diag =
          static_cast<Index>(samples[s].label) * bundle.dim +
          static_cast<Index>(samples[s].label);
      for (size_t k = 0; k < derivatives.size(); ++k) {
        const Complex dp = (derivatives[k].row(diag) * v).value();
        ev.gradient(static_cast<Index>(k)) -= w * dp.real();
      }
    }
  }
  ev.record.average_success = avg;
  ev.record.loss = 1.0 - avg;
  return ev;
}

}  // namespace

double success_probability(const DensityMatrix& rho_out, int label) {
  if (label < 0 || label >= rho_out.dim()) {
    throw DimensionError("success_probability: label out of range");
  }
  return std::clamp(rho_out.population(label), 0.0, 1.0);
}

double loss(const std::vector<LabeledSample>& samples,
            const std::vector<DensityMatrix>& outputs, LossKind kind) {
  if (samples.empty()) {
    throw ConfigError("loss: empty sample list");
  }
  if (samples.size() != outputs.size()) {
    throw DimensionError("loss: samples and outputs are not aligned");
  }
  double avg = 0.0;
  for (size_t s = 0; s < samples.size(); ++s) {
    avg += sample_weight(samples, s, kind) *
           success_probability(outputs[s], samples[s].label);
  }
  return 1.0 - avg;
}

RealVector loss_gradient(const NetworkTopology& topo,
                         const ParameterVector& params,
                         const std::vector<LabeledSample>& samples,
                         const TrainingConfig& config) {
  if (samples.empty()) {
    throw ConfigError("loss_gradient: empty sample list");
  }
  return evaluate(topo, params, samples, config, 0, true).gradient;
}

ParameterVector gd_step(const ParameterVector& params, const RealVector& grad,
                        double eta) {
  if (grad.size() != params.size()) {
    throw DimensionError("gd_step: gradient length mismatch");
  }
  return ParameterVector::split(params.concat() - eta * grad,
                                params.h.size());
}

TrainingTrace train(const NetworkTopology& topo,
                    const std::vector<LabeledSample>& samples,
                    const TrainingConfig& config) {
  if (samples.empty()) {
    throw ConfigError("train: empty sample list");
  }
  if (!(config.learning_rate > 0.0) || config.iterations < 0 ||
      !(config.init_low < config.init_high)) {
    throw ConfigError("train: invalid training configuration");
  }

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> uniform(config.init_low,
                                                 config.init_high);
  ParameterVector params;
  params.h = RealVector::NullaryExpr(
      static_cast<Index>(topo.hamiltonian_edges.size()),
      [&](Index) { return uniform(rng); });
  params.gamma = RealVector::NullaryExpr(
      static_cast<Index>(topo.lindblad_edges.size()),
      [&](Index) { return uniform(rng); });

  TrainingTrace trace;
  trace.initial_params = params;
  for (int it = 0; it < config.iterations; ++it) {
    Evaluation ev = evaluate(topo, params, samples, config, it, true);
    trace.records.push_back(std::move(ev.record));
    params = gd_step(params, ev.gradient, config.learning_rate);
  }
  Evaluation last = evaluate(topo, params, samples, config, config.iterations,
                             false);
  trace.records.push_back(std::move(last.record));
  trace.final_params = params;
  return trace;
}

}  // namespace qsnn
