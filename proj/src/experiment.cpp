#include "qsnn/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "qsnn/linalg.hpp"
#include "qsnn/liouvillian.hpp"

namespace qsnn {

namespace {

using nlohmann::json;

constexpr const char* kArtifactVersion = "1.0.0";

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string shape_name(const std::vector<int>& layers) {
  std::string s;
  for (size_t i = 0; i < layers.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(layers[i]);
  }
  return s;
}

std::uint64_t sub_run_seed(std::uint64_t seed, std::uint64_t run_index) {
  return seed * 1000003ULL + run_index;
}

LossKind loss_kind_from_string(const std::string& name) {
  if (name == "weighted_discrimination") {
    return LossKind::weighted_discrimination;
  }
  if (name == "mean_classification") return LossKind::mean_classification;
  throw ConfigError("unknown loss kind: " + name);
}

std::string to_string(LossKind kind) {
  return kind == LossKind::weighted_discrimination ? "weighted_discrimination"
                                                   : "mean_classification";
}

// One training run: appends its per-iteration rows and summary row.
void record_run(ExperimentResults& results, const NetworkTopology& topo,
                const std::vector<LabeledSample>& samples,
                const std::string& group, const std::string& run_id,
                std::uint64_t seed, std::uint64_t run_index,
                std::optional<double> helstrom,
                ParameterVector* final_params = nullptr) {
  TrainingConfig tc = results.resolved.training;
  tc.seed = sub_run_seed(seed, run_index);
  const TrainingTrace trace = train(topo, samples, tc);
  for (const IterationRecord& rec : trace.records) {
    results.trace.push_back(
        {run_id, seed, rec.iteration, rec.loss, rec.average_success});
  }
  const IterationRecord& last = trace.records.back();
  results.summaries.push_back(
      {group, run_id, seed, last.loss, last.average_success, helstrom});
  if (final_params != nullptr) *final_params = trace.final_params;
}

void run_binary_grid(ExperimentResults& results, bool complex_family) {
  const ExperimentConfig& cfg = results.resolved;
  const NetworkTopology topo = cfg.topology.build();
  for (int k = 0; k < cfg.angle_count; ++k) {
    const double angle = k * std::numbers::pi / 6.0;
    const DensityMatrix s1 =
        complex_family ? pure_state_complex(0.0) : pure_state_real(0.0);
    const DensityMatrix s2 =
        complex_family ? pure_state_complex(angle) : pure_state_real(angle);
    const double ph = helstrom_success(s1, s2, 0.5, 0.5);
    const std::string run_id =
        (complex_family ? "phi_" : "theta_") + std::to_string(k);
    const auto samples = binary_training_set(s1, s2, topo);
    for (std::uint64_t seed : cfg.seeds) {
      record_run(results, topo, samples, "all", run_id, seed,
                 static_cast<std::uint64_t>(k), ph);
    }
  }
}

void run_binary_mixed(ExperimentResults& results) {
  const ExperimentConfig& cfg = results.resolved;
  const NetworkTopology topo = cfg.topology.build();
  for (size_t ri = 0; ri < cfg.radii.size(); ++ri) {
    const double r = cfg.radii[ri];
    const std::string group = "r" + fmt(r);
    for (int pair = 0; pair < cfg.pairs_per_radius; ++pair) {
      const std::uint64_t run_index = ri * 1000 + pair;
      for (std::uint64_t seed : cfg.seeds) {
        const auto [s1, s2] =
            random_bloch_pair(r, sub_run_seed(seed, run_index) ^ 0x5bd1);
        const double ph = helstrom_success(s1, s2, 0.5, 0.5);
        record_run(results, topo, binary_training_set(s1, s2, topo), group,
                   group + "/pair_" + std::to_string(pair), seed, run_index,
                   ph);
      }
    }
  }
}

void run_multi_state(ExperimentResults& results) {
  const ExperimentConfig& cfg = results.resolved;
  std::uint64_t run_index = 0;
  for (bool complex_family : {false, true}) {
    for (int m : cfg.state_counts) {
      const NetworkTopology topo = standard_topology(2, {m}, m);
      const int n = topo.dim();
      std::vector<LabeledSample> samples;
      for (int s = 1; s <= m; ++s) {
        const DensityMatrix state = complex_family
                                        ? multi_state_complex(m, s)
                                        : multi_state_real(m, s);
        // The s-th state maps to output neuron N - s.
        samples.push_back({encode_input(state, n), n - s, 1.0 / m});
      }
      const std::string run_id =
          std::string(complex_family ? "complex" : "real") + "_M" +
          std::to_string(m);
      for (std::uint64_t seed : cfg.seeds) {
        record_run(results, topo, samples, run_id, run_id, seed, run_index,
                   std::nullopt);
      }
      ++run_index;
    }
  }
}

void run_ghz_w(ExperimentResults& results) {
  const ExperimentConfig& cfg = results.resolved;
  const NetworkTopology topo = cfg.topology.build();
  const DensityMatrix ghz = ghz_state();
  const DensityMatrix w = w_state();
  const double ph = helstrom_success(ghz, w, 0.5, 0.5);
  const auto samples = binary_training_set(ghz, w, topo);
  for (std::uint64_t seed : cfg.seeds) {
    record_run(results, topo, samples, "all", "ghz_w", seed, 0, ph);
  }
}

void run_werner(ExperimentResults& results) {
  const ExperimentConfig& cfg = results.resolved;
  const NetworkTopology topo = cfg.topology.build();
  ComplexMatrix u1(2, 2), u2(2, 2);
  u1 << 1, 0, 0, -1;  // sigma_z
  u2 = ComplexMatrix::Identity(2, 2);
  const WernerSets sets = build_werner_sets(topo, u1, u2);
  for (std::uint64_t seed : cfg.seeds) {
    ParameterVector final_params;
    record_run(results, topo, sets.train, "all", "werner", seed, 0,
               std::nullopt, &final_params);
    ClassifierReport report = evaluate_classifier(
        topo, final_params, cfg.training.evolution_time, sets.test);
    report.seed = seed;
    results.classifier_reports.push_back(std::move(report));
  }
}

void run_ablation(ExperimentResults& results) {
  const ExperimentConfig& cfg = results.resolved;
  std::uint64_t shape_index = 0;
  for (const std::vector<int>& layers : cfg.ablation_shapes) {
    TopologySpec spec;
    spec.layers = layers;
    const NetworkTopology topo = spec.build();
    const std::string group = shape_name(layers);
    for (int k = 0; k < cfg.angle_count; ++k) {
      const double theta = k * std::numbers::pi / 6.0;
      const DensityMatrix s1 = pure_state_real(0.0);
      const DensityMatrix s2 = pure_state_real(theta);
      const double ph = helstrom_success(s1, s2, 0.5, 0.5);
      const auto samples = binary_training_set(s1, s2, topo);
      for (std::uint64_t seed : cfg.seeds) {
        record_run(results, topo, samples, group,
                   group + "/theta_" + std::to_string(k), seed,
                   shape_index * 100 + k, ph);
      }
    }
    ++shape_index;
  }
}

json edges_to_json(const std::vector<std::pair<int, int>>& edges) {
  json arr = json::array();
  for (auto [a, b] : edges) arr.push_back(json::array({a, b}));
  return arr;
}

std::vector<std::pair<int, int>> edges_from_json(const json& arr) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : arr) {
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return edges;
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::binary_real: return "binary_real";
    case ExperimentKind::binary_complex: return "binary_complex";
    case ExperimentKind::binary_mixed: return "binary_mixed";
    case ExperimentKind::multi_state: return "multi_state";
    case ExperimentKind::ghz_w: return "ghz_w";
    case ExperimentKind::werner_classify: return "werner_classify";
    case ExperimentKind::topology_ablation: return "topology_ablation";
  }
  throw ConfigError("unknown experiment kind");
}

ExperimentKind experiment_kind_from_string(const std::string& name) {
  for (ExperimentKind kind :
       {ExperimentKind::binary_real, ExperimentKind::binary_complex,
        ExperimentKind::binary_mixed, ExperimentKind::multi_state,
        ExperimentKind::ghz_w, ExperimentKind::werner_classify,
        ExperimentKind::topology_ablation}) {
    if (to_string(kind) == name) return kind;
  }
  throw ConfigError("unknown experiment kind: " + name);
}

NetworkTopology TopologySpec::build() const {
  if (layers.size() < 2) {
    throw ConfigError("topology: need at least two layers");
  }
  NetworkTopology topo;
  if (hamiltonian_edges || lindblad_edges) {
    topo.layer_sizes = layers;
    NetworkTopology standard = standard_topology(
        layers.front(), {layers.begin() + 1, layers.end() - 1},
        layers.back());
    topo.hamiltonian_edges =
        hamiltonian_edges ? *hamiltonian_edges : standard.hamiltonian_edges;
    topo.lindblad_edges =
        lindblad_edges ? *lindblad_edges : standard.lindblad_edges;
    topo.validate();
  } else {
    topo = standard_topology(layers.front(),
                             {layers.begin() + 1, layers.end() - 1},
                             layers.back());
  }
  return topo;
}

void ExperimentConfig::validate() const {
  if (seeds.empty()) throw ConfigError("config: seeds must be non-empty");
  if (out_dir.empty()) throw ConfigError("config: out directory missing");
  if (!(training.learning_rate > 0.0)) {
    throw ConfigError("config: learning_rate must be positive");
  }
  if (training.iterations < 0) {
    throw ConfigError("config: iterations must be non-negative");
  }
  if (!(training.evolution_time > 0.0)) {
    throw ConfigError("config: evolution time must be positive");
  }
  switch (kind) {
    case ExperimentKind::binary_real:
    case ExperimentKind::binary_complex:
      if (angle_count < 1) throw ConfigError("config: angle_count < 1");
      break;
    case ExperimentKind::binary_mixed:
      if (radii.empty()) throw ConfigError("config: radii missing");
      if (pairs_per_radius < 1) {
        throw ConfigError("config: pairs_per_radius < 1");
      }
      for (double r : radii) {
        if (r < 0.0 || r > 1.0) {
          throw ConfigError("config: radius outside [0, 1]");
        }
      }
      break;
    case ExperimentKind::multi_state:
      if (state_counts.empty()) {
        throw ConfigError("config: state_counts missing");
      }
      for (int m : state_counts) {
        if (m < 2) throw ConfigError("config: state count < 2");
      }
      break;
    case ExperimentKind::topology_ablation:
      if (ablation_shapes.empty()) {
        throw ConfigError("config: ablation_shapes missing");
      }
      if (angle_count < 1) throw ConfigError("config: angle_count < 1");
      break;
    default:
      break;
  }
  if (kind != ExperimentKind::topology_ablation &&
      kind != ExperimentKind::multi_state) {
    topology.build();  // throws on malformed topology
  }
}

ExperimentConfig config_from_json_text(const std::string& text) {
  json j = json::parse(text);
  ExperimentConfig cfg = default_config(
      experiment_kind_from_string(j.at("kind").get<std::string>()));
  if (j.contains("topology")) {
    const json& t = j.at("topology");
    cfg.topology.layers = t.at("layers").get<std::vector<int>>();
    if (t.contains("hamiltonian_edges")) {
      cfg.topology.hamiltonian_edges =
          edges_from_json(t.at("hamiltonian_edges"));
    }
    if (t.contains("lindblad_edges")) {
      cfg.topology.lindblad_edges = edges_from_json(t.at("lindblad_edges"));
    }
  }
  if (j.contains("training")) {
    const json& t = j.at("training");
    if (t.contains("eta")) cfg.training.learning_rate = t.at("eta");
    if (t.contains("iterations")) cfg.training.iterations = t.at("iterations");
    if (t.contains("time")) cfg.training.evolution_time = t.at("time");
    if (t.contains("init_low")) cfg.training.init_low = t.at("init_low");
    if (t.contains("init_high")) cfg.training.init_high = t.at("init_high");
    if (t.contains("loss")) {
      cfg.training.loss_kind =
          loss_kind_from_string(t.at("loss").get<std::string>());
    }
  }
  if (j.contains("seeds")) {
    cfg.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  }
  if (j.contains("out")) cfg.out_dir = j.at("out").get<std::string>();
  if (j.contains("task")) {
    const json& t = j.at("task");
    if (t.contains("angle_count")) cfg.angle_count = t.at("angle_count");
    if (t.contains("radii")) {
      cfg.radii = t.at("radii").get<std::vector<double>>();
    }
    if (t.contains("pairs_per_radius")) {
      cfg.pairs_per_radius = t.at("pairs_per_radius");
    }
    if (t.contains("state_counts")) {
      cfg.state_counts = t.at("state_counts").get<std::vector<int>>();
    }
    if (t.contains("ablation_shapes")) {
      cfg.ablation_shapes =
          t.at("ablation_shapes").get<std::vector<std::vector<int>>>();
    }
  }
  cfg.validate();
  return cfg;
}

std::string config_to_json_text(const ExperimentConfig& config) {
  json j;
  j["artifact_version"] = kArtifactVersion;
  j["kind"] = to_string(config.kind);
  json topo;
  topo["layers"] = config.topology.layers;
  if (config.topology.hamiltonian_edges) {
    topo["hamiltonian_edges"] =
        edges_to_json(*config.topology.hamiltonian_edges);
  }
  if (config.topology.lindblad_edges) {
    topo["lindblad_edges"] = edges_to_json(*config.topology.lindblad_edges);
  }
  j["topology"] = topo;
  j["training"] = {
      {"eta", config.training.learning_rate},
      {"iterations", config.training.iterations},
      {"time", config.training.evolution_time},
      {"init_low", config.training.init_low},
      {"init_high", config.training.init_high},
      {"loss", to_string(config.training.loss_kind)},
  };
  j["seeds"] = config.seeds;
  j["out"] = config.out_dir;
  json task;
  task["angle_count"] = config.angle_count;
  task["radii"] = config.radii;
  task["pairs_per_radius"] = config.pairs_per_radius;
  task["state_counts"] = config.state_counts;
  task["ablation_shapes"] = config.ablation_shapes;
  j["task"] = task;
  return j.dump(2) + "\n";
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return config_from_json_text(ss.str());
}

ExperimentConfig default_config(ExperimentKind kind) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  cfg.topology.layers = {2, 2, 2};
  cfg.training.learning_rate = 20.0;
  cfg.training.iterations = 100;
  cfg.training.evolution_time = 10.0;
  cfg.training.loss_kind = LossKind::weighted_discrimination;
  cfg.seeds = {1};
  cfg.out_dir = "out/" + to_string(kind);
  switch (kind) {
    case ExperimentKind::binary_real:
      cfg.training.learning_rate = 10.0;
      cfg.seeds = {1, 2, 3};
      break;
    case ExperimentKind::binary_complex:
      cfg.seeds = {1, 2, 3};
      break;
    case ExperimentKind::binary_mixed:
      break;
    case ExperimentKind::multi_state:
      cfg.training.iterations = 50;
      cfg.training.loss_kind = LossKind::mean_classification;
      break;
    case ExperimentKind::ghz_w:
      cfg.topology.layers = {8, 2, 2};
      cfg.training.iterations = 50;
      break;
    case ExperimentKind::werner_classify:
      cfg.topology.layers = {4, 4, 2};
      cfg.training.iterations = 60;
      cfg.training.loss_kind = LossKind::mean_classification;
      cfg.seeds = {1, 2, 3, 4, 5};
      break;
    case ExperimentKind::topology_ablation:
      cfg.training.learning_rate = 10.0;
      break;
  }
  return cfg;
}

ExperimentResults run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentResults results;
  results.resolved = config;
  switch (config.kind) {
    case ExperimentKind::binary_real: run_binary_grid(results, false); break;
    case ExperimentKind::binary_complex:
      run_binary_grid(results, true);
      break;
    case ExperimentKind::binary_mixed: run_binary_mixed(results); break;
    case ExperimentKind::multi_state: run_multi_state(results); break;
    case ExperimentKind::ghz_w: run_ghz_w(results); break;
    case ExperimentKind::werner_classify: run_werner(results); break;
    case ExperimentKind::topology_ablation: run_ablation(results); break;
  }
  return results;
}

ClassifierReport evaluate_classifier(const NetworkTopology& topo,
                                     const ParameterVector& params,
                                     double evolution_time,
                                     const std::vector<WernerSample>& test) {
  const LiouvillianBundle bundle = assemble(topo, params, evolution_time);
  const ComplexMatrix propagator = expm(bundle.generator * bundle.time);
  const int sep = topo.output_offset();
  const int ent = sep + 1;

  ClassifierReport report;
  double sums[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
  int counts[2] = {0, 0};
  for (const WernerSample& sample : test) {
    const DensityMatrix rho_in = encode_input(sample.state, topo.dim());
    const DensityMatrix rho_out = DensityMatrix(
        devectorize(propagator * vectorize(rho_in), bundle.dim));
    StateReport row;
    row.p = sample.p;
    row.truth = sample.truth;
    row.raw_separable = success_probability(rho_out, sep);
    row.raw_entangled = success_probability(rho_out, ent);
    const double total = row.raw_separable + row.raw_entangled;
    row.norm_separable = total > 0.0 ? row.raw_separable / total : 0.5;
    row.norm_entangled = total > 0.0 ? row.raw_entangled / total : 0.5;
    row.predicted = row.norm_entangled > row.norm_separable
                        ? EntanglementClass::entangled
                        : EntanglementClass::separable;
    const int t = sample.truth == EntanglementClass::separable ? 0 : 1;
    sums[t][0] += row.norm_separable;
    sums[t][1] += row.norm_entangled;
    ++counts[t];
    report.states.push_back(row);
  }
  for (int t = 0; t < 2; ++t) {
    for (int c = 0; c < 2; ++c) {
      report.confusion.values[t][c] =
          counts[t] > 0 ? sums[t][c] / counts[t] : 0.0;
    }
  }
  return report;
}

void emit_outputs(const ExperimentResults& results) {
  namespace fs = std::filesystem;
  const fs::path dir(results.resolved.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error("emit_outputs: cannot create directory " + dir.string() +
                ": " + ec.message());
  }
  auto open = [&](const char* name) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) {
      throw Error("emit_outputs: cannot write " + (dir / name).string());
    }
    return out;
  };

  {
    std::ofstream out = open("manifest.json");
    out << config_to_json_text(results.resolved);
  }
  {
    std::ofstream out = open("trace.csv");
    out << "run_id,seed,iteration,loss,average_success\n";
    for (const TraceRow& row : results.trace) {
      out << row.run_id << ',' << row.seed << ',' << row.iteration << ','
          << fmt(row.loss) << ',' << fmt(row.average_success) << '\n';
    }
  }
  {
    std::ofstream out = open("summary.csv");
    out << "group,run_id,seed,final_loss,final_success,helstrom\n";
    for (const SummaryRow& row : results.summaries) {
      out << row.group << ',' << row.run_id << ',' << row.seed << ','
          << fmt(row.final_loss) << ',' << fmt(row.final_success) << ','
          << (row.helstrom ? fmt(*row.helstrom) : std::string()) << '\n';
    }
    // Aggregate rows, in first-appearance order of the groups.
    std::vector<std::string> groups;
    for (const SummaryRow& row : results.summaries) {
      if (std::find(groups.begin(), groups.end(), row.group) == groups.end()) {
        groups.push_back(row.group);
      }
    }
    for (const std::string& group : groups) {
      double sum = 0.0, sum_sq = 0.0, hel_sum = 0.0;
      int n = 0, hel_n = 0;
      for (const SummaryRow& row : results.summaries) {
        if (row.group != group) continue;
        sum += row.final_success;
        sum_sq += row.final_success * row.final_success;
        ++n;
        if (row.helstrom) {
          hel_sum += *row.helstrom;
          ++hel_n;
        }
      }
      const double mean = sum / n;
      const double variance = sum_sq / n - mean * mean;
      out << group << ",mean,0," << fmt(1.0 - mean) << ',' << fmt(mean) << ','
          << (hel_n > 0 ? fmt(hel_sum / hel_n) : std::string()) << '\n';
      out << group << ",variance,0,," << fmt(variance) << ",\n";
    }
  }
  if (!results.classifier_reports.empty()) {
    std::ofstream states = open("states.csv");
    states << "seed,p,raw_separable,raw_entangled,p_separable,p_entangled,"
              "true_label,predicted_label\n";
    std::ofstream confusion = open("confusion.csv");
    confusion << "seed,true_class,predict_separable,predict_entangled\n";
    auto label = [](EntanglementClass c) {
      return c == EntanglementClass::separable ? "S" : "E";
    };
    for (const ClassifierReport& report : results.classifier_reports) {
      for (const StateReport& row : report.states) {
        states << report.seed << ',' << fmt(row.p) << ','
               << fmt(row.raw_separable) << ',' << fmt(row.raw_entangled)
               << ',' << fmt(row.norm_separable) << ','
               << fmt(row.norm_entangled) << ',' << label(row.truth) << ','
               << label(row.predicted) << '\n';
      }
      for (int t = 0; t < 2; ++t) {
        confusion << report.seed << ',' << (t == 0 ? "S" : "E") << ','
                  << fmt(report.confusion.values[t][0]) << ','
                  << fmt(report.confusion.values[t][1]) << '\n';
      }
    }
  }
}

}  // namespace qsnn
