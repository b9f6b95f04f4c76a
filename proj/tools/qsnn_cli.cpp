// Command-line front end: one subcommand per experiment, plus `run` for
// replaying a saved config or manifest.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qsnn/experiment.hpp"

namespace {

struct CommonFlags {
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<int> iterations;
  std::optional<double> eta;
  std::optional<double> time;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path,
                  "JSON config file (flags override its fields)");
  cmd->add_option("--seed", flags.seed, "replace the seed list with one seed");
  cmd->add_option("--out", flags.out_dir, "output directory");
  cmd->add_option("--iterations", flags.iterations,
                  "gradient-descent iterations");
  cmd->add_option("--eta", flags.eta, "learning rate");
  cmd->add_option("--time", flags.time, "evolution time T");
}

int run_with(qsnn::ExperimentKind kind, const CommonFlags& flags,
             bool kind_from_config) {
  qsnn::ExperimentConfig cfg;
  if (flags.config_path) {
    cfg = qsnn::load_config(*flags.config_path);
    if (!kind_from_config && cfg.kind != kind) {
      std::cerr << "config kind '" << qsnn::to_string(cfg.kind)
                << "' does not match subcommand\n";
      return 1;
    }
  } else {
    cfg = qsnn::default_config(kind);
  }
  if (flags.seed) cfg.seeds = {*flags.seed};
  if (flags.out_dir) cfg.out_dir = *flags.out_dir;
  if (flags.iterations) cfg.training.iterations = *flags.iterations;
  if (flags.eta) cfg.training.learning_rate = *flags.eta;
  if (flags.time) cfg.training.evolution_time = *flags.time;

  const qsnn::ExperimentResults results = qsnn::run_experiment(cfg);
  qsnn::emit_outputs(results);

  std::cout << "wrote " << results.resolved.out_dir << " ("
            << results.summaries.size() << " runs)\n";
  for (const qsnn::SummaryRow& row : results.summaries) {
    std::cout << row.run_id << " seed=" << row.seed
              << " P_N=" << row.final_success;
    if (row.helstrom) std::cout << " P_H=" << *row.helstrom;
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum stochastic neural network training lab"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    qsnn::ExperimentKind kind;
  };
  const Sub subs[] = {
      {"binary-real", "discriminate two real-amplitude pure states",
       qsnn::ExperimentKind::binary_real},
      {"binary-complex", "discriminate two complex-amplitude pure states",
       qsnn::ExperimentKind::binary_complex},
      {"binary-mixed", "discriminate random mixed-state pairs",
       qsnn::ExperimentKind::binary_mixed},
      {"multi-state", "discriminate M pure states",
       qsnn::ExperimentKind::multi_state},
      {"ghz-w", "discriminate the GHZ and W states",
       qsnn::ExperimentKind::ghz_w},
      {"werner", "classify Werner-like states as entangled or separable",
       qsnn::ExperimentKind::werner_classify},
      {"ablation", "compare network shapes on the binary task",
       qsnn::ExperimentKind::topology_ablation},
  };

  std::vector<std::pair<CLI::App*, CommonFlags>> parsed;
  parsed.reserve(std::size(subs) + 1);
  for (const Sub& sub : subs) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
    parsed.emplace_back(cmd, CommonFlags{});
    add_common_flags(cmd, parsed.back().second);
  }
  CLI::App* run_cmd =
      app.add_subcommand("run", "run from a config or manifest file");
  parsed.emplace_back(run_cmd, CommonFlags{});
  add_common_flags(run_cmd, parsed.back().second);
  run_cmd->get_option("--config")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    for (size_t i = 0; i < std::size(subs); ++i) {
      if (parsed[i].first->parsed()) {
        return run_with(subs[i].kind, parsed[i].second, false);
      }
    }
    if (run_cmd->parsed()) {
      return run_with(qsnn::ExperimentKind::binary_real, parsed.back().second,
                      true);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
