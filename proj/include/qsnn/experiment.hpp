#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsnn/network.hpp"
#include "qsnn/tasks.hpp"
#include "qsnn/training.hpp"
#include "qsnn/types.hpp"

namespace qsnn {

enum class ExperimentKind {
  binary_real,
  binary_complex,
  binary_mixed,
  multi_state,
  ghz_w,
  werner_classify,
  topology_ablation,
};

std::string to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& name);

/// Network description in a config: a standard layered shape, optionally
/// overridden by explicit edge lists.
struct TopologySpec {
  std::vector<int> layers;
  std::optional<std::vector<std::pair<int, int>>> hamiltonian_edges;
  std::optional<std::vector<std::pair<int, int>>> lindblad_edges;

  NetworkTopology build() const;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::binary_real;
  TopologySpec topology;
  TrainingConfig training;  // the seed field is ignored; seeds below
  std::vector<std::uint64_t> seeds{1};
  std::string out_dir = "out";

  // Task parameters; only the fields relevant to `kind` are used.
  int angle_count = 12;                      // binary grids: k * pi/6 steps
  std::vector<double> radii{0.1, 0.5, 0.9};  // binary_mixed
  int pairs_per_radius = 10;
  std::vector<int> state_counts{3, 4, 5};    // multi_state M values
  std::vector<std::vector<int>> ablation_shapes{
      {2, 2}, {2, 2, 2}, {2, 3, 2}, {2, 2, 2, 2}};

  void validate() const;
};

ExperimentConfig config_from_json_text(const std::string& text);
std::string config_to_json_text(const ExperimentConfig& config);
ExperimentConfig load_config(const std::string& path);

/// Defaults matching the published protocol for each experiment kind.
ExperimentConfig default_config(ExperimentKind kind);

struct TraceRow {
  std::string run_id;
  std::uint64_t seed = 0;
  int iteration = 0;
  double loss = 0.0;
  double average_success = 0.0;
};

struct SummaryRow {
  std::string group;   // aggregation key (e.g. the topology shape)
  std::string run_id;
  std::uint64_t seed = 0;
  double final_loss = 0.0;
  double final_success = 0.0;
  std::optional<double> helstrom;
};

struct StateReport {
  double p = 0.0;
  double raw_separable = 0.0;  // populations of the two output neurons
  double raw_entangled = 0.0;
  double norm_separable = 0.0;  // renormalized over the output layer
  double norm_entangled = 0.0;
  EntanglementClass truth = EntanglementClass::separable;
  EntanglementClass predicted = EntanglementClass::separable;
};

/// Class-conditional mean success/error probabilities over a labeled test
/// grid, normalized over the output layer; rows sum to 1.
struct ConfusionMatrix {
  // [true class][predicted class], class 0 = separable, 1 = entangled.
  double values[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
};

struct ClassifierReport {
  std::uint64_t seed = 0;
  std::vector<StateReport> states;
  ConfusionMatrix confusion;
};

struct ExperimentResults {
  ExperimentConfig resolved;
  std::vector<TraceRow> trace;
  std::vector<SummaryRow> summaries;
  std::vector<ClassifierReport> classifier_reports;  // werner only, per seed
};

ExperimentResults run_experiment(const ExperimentConfig& config);

/// Runs a trained network over the Werner test grid.
ClassifierReport evaluate_classifier(const NetworkTopology& topo,
                                     const ParameterVector& params,
                                     double evolution_time,
                                     const std::vector<WernerSample>& test);

/// Writes trace.csv, summary.csv (with mean/variance aggregate rows),
/// manifest.json, and for the Werner task states.csv and confusion.csv
/// under results.resolved.out_dir. Byte-deterministic given the config.
void emit_outputs(const ExperimentResults& results);

}  // namespace qsnn
