//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "smh/error.hpp"
#include "smh/run.hpp"

namespace {

struct Flags {
  std::string config_path;
  std::string dataset;
  std::string smiles_col;
  std::string target_col;
  std::string out;
  std::string spectral_mode;
  int k = -1;
  double gamma = -1.0;
  double fraction = -1.0;
  double cutoff = -1.0;
  int folds = -1;
  long long seed = -1;
  int threads = -1;
  bool svg = false;
};

void add_common_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path, "key = value config file");
  cmd->add_option("--dataset", f.dataset, "CSV of SMILES and targets");
  cmd->add_option("--smiles-col", f.smiles_col, "SMILES column name");
  cmd->add_option("--target-col", f.target_col, "target column name");
  cmd->add_option("--k", f.k, "spectral embedding size");
  cmd->add_option("--spectral-mode", f.spectral_mode, "eigenvalues or gft");
  cmd->add_option("--gamma", f.gamma, "kernel width for the covariance");
  cmd->add_option("--fraction", f.fraction, "synthetic fraction of N");
  cmd->add_option("--cutoff", f.cutoff, "edge binarization cutoff");
  cmd->add_option("--folds", f.folds, "cross-validation folds");
  cmd->add_option("--seed", f.seed, "master seed");
  cmd->add_option("--out", f.out, "output directory for this run");
  cmd->add_option("--threads", f.threads, "worker thread cap");
  cmd->add_flag("--svg", f.svg, "also write SVG plots");
}

// flags win over config-file values
smh::RunConfig build_config(const Flags& f) {
  smh::RunConfig c;
  if (!f.config_path.empty()) c = smh::RunConfig::from_file(f.config_path);
  if (!f.dataset.empty()) c.dataset_path = f.dataset;
  if (!f.smiles_col.empty()) c.smiles_col = f.smiles_col;
  if (!f.target_col.empty()) c.target_col = f.target_col;
  if (!f.out.empty()) c.out_dir = f.out;
  if (f.k > 0) c.exp.aug.k = f.k;
  if (!f.spectral_mode.empty()) {
    c.exp.aug.spectral_mode = smh::spectral_mode_from_string(f.spectral_mode);
  }
  if (f.gamma > 0) c.exp.aug.gamma = f.gamma;
  if (f.fraction > 0) c.exp.aug.sampling_fraction = f.fraction;
  if (f.cutoff > 0) c.exp.aug.binarization_cutoff = f.cutoff;
  if (f.folds > 0) c.exp.folds = f.folds;
  if (f.seed >= 0) c.exp.aug.master_seed = static_cast<std::uint64_t>(f.seed);
  if (f.threads > 0) c.threads = f.threads;
  if (f.svg) c.emit_svg = true;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral-domain graph augmentation for imbalanced regression"};
  app.require_subcommand(1);

  Flags flags;
  std::string stats_original, stats_synthetic;

  auto* augment = app.add_subcommand("augment", "generate synthetic samples");
  add_common_flags(augment, flags);
  auto* evaluate =
      app.add_subcommand("evaluate", "cross-validated baseline-vs-augmented run");
  add_common_flags(evaluate, flags);
  auto* stats =
      app.add_subcommand("stats", "structural comparison of two graph files");
  add_common_flags(stats, flags);
  stats->add_option("original", stats_original, "dataset CSV or JSONL")
      ->required();
  stats->add_option("synthetic", stats_synthetic, "dataset CSV or JSONL")
      ->required();
  auto* relevance_plot =
      app.add_subcommand("relevance-plot", "grid CSV of phi, density, weight");
  add_common_flags(relevance_plot, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return (code == 0) ? 0 : 2;  // keep --help at 0, bad flags at 2
  }

  smh::RunConfig config;
  try {
    config = build_config(flags);
    const bool needs_dataset = !stats->parsed();
    config.validate(needs_dataset);
  } catch (const smh::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const smh::Error& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  }

  try {
    if (augment->parsed()) {
      smh::cmd_augment(config);
    } else if (evaluate->parsed()) {
      smh::cmd_evaluate(config);
    } else if (stats->parsed()) {
      smh::cmd_stats(config, stats_original, stats_synthetic);
    } else if (relevance_plot->parsed()) {
      smh::cmd_relevance_plot(config);
    }
  } catch (const smh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
