//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "smh/run.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "smh/dataset.hpp"
#include "smh/error.hpp"
#include "smh/manifold.hpp"
#include "smh/metrics.hpp"
#include "smh/parallel.hpp"
#include "smh/reconstruct.hpp"
#include "smh/svg.hpp"

namespace smh {

namespace fs = std::filesystem;

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
}

void write_config_echo(const fs::path& dir, const RunConfig& config) {
  write_text(dir / "config_echo.json", config.echo_json().dump(2) + "\n");
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double pct_delta(double original, double synthetic) {
  if (original == 0.0) return 0.0;
  return 100.0 * (synthetic - original) / original;
}

std::string stats_csv(const StructuralStats& a, const StructuralStats& b) {
  std::ostringstream os;
  os << "metric,original,synthetic,delta_pct\n";
  auto row = [&](const char* name, double x, double y) {
    os << name << ',' << fmt(x) << ',' << fmt(y) << ',' << fmt(pct_delta(x, y))
       << '\n';
  };
  row("node_mean", a.node_mean, b.node_mean);
  row("node_std", a.node_std, b.node_std);
  row("edge_mean", a.edge_mean, b.edge_mean);
  row("edge_std", a.edge_std, b.edge_std);
  row("density_mean", a.density_mean, b.density_mean);
  row("density_std", a.density_std, b.density_std);
  os << "count," << a.count << ',' << b.count << ",0\n";
  return os.str();
}

bool looks_like_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  char c = 0;
  while (in.get(c)) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{';
  }
  return false;
}

std::vector<Graph> load_graphs_any(const RunConfig& config,
                                   const std::string& path) {
  if (looks_like_jsonl(path)) {
    std::vector<Graph> graphs;
    for (auto& rec : load_synthetic_jsonl(path)) {
      graphs.push_back(std::move(rec.graph));
    }
    return graphs;
  }
  return load_csv(path, config.smiles_col, config.target_col).graphs();
}

struct FittedPipeline {
  Dataset dataset;
  std::vector<SpectralDecomposition> decompositions;
  RelevanceFunction relevance;
  DensityEstimate density;
  ManifoldModel manifold;
  AugmentationConfig aug;  // with the effective k
};

FittedPipeline fit_pipeline(const RunConfig& config) {
  Dataset dataset =
      load_csv(config.dataset_path, config.smiles_col, config.target_col);
  if (dataset.rows_skipped > 0) {
    std::cerr << "[smh] warning: skipped " << dataset.rows_skipped << " of "
              << dataset.rows_total << " rows\n";
  }
  auto decompositions = spectral_decompose_all(dataset.graphs());
  const auto targets = dataset.targets();
  auto relevance = config.exp.make_relevance(targets);
  auto density = DensityEstimate::fit(targets);

  AugmentationConfig aug = config.exp.aug;
  aug.k = std::min(aug.k, dataset.min_node_count());

  std::vector<SpectralEmbedding> embeddings;
  embeddings.reserve(dataset.size());
  for (const auto& d : decompositions) {
    embeddings.push_back(embed(d, aug.k, aug.spectral_mode));
  }

  TreeHyper hyper = config.exp.spectrum_hyper;
  if (config.exp.grid_search && !config.exp.grid.single()) {
    hyper = select_spectrum_hyper(targets, embeddings, relevance,
                                  config.exp.grid, aug.master_seed);
    std::cerr << "[smh] grid selected estimators=" << hyper.n_estimators
              << " learning_rate=" << hyper.learning_rate
              << " max_depth=" << hyper.max_depth << "\n";
  }
  auto regressor =
      SpectrumRegressor::fit(targets, embeddings, relevance, hyper, aug.master_seed);
  auto manifold = make_manifold(std::move(regressor), targets, embeddings,
                                aug.gamma, aug.cov_ridge);
  return FittedPipeline{std::move(dataset), std::move(decompositions),
                        std::move(relevance), std::move(density),
                        std::move(manifold), aug};
}

}  // namespace

std::string resolve_run_dir(const RunConfig& config) {
  fs::path dir;
  if (!config.out_dir.empty()) {
    dir = config.out_dir;
  } else {
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
    dir = fs::path("runs") / ("run_" + std::to_string(ms));
  }
  fs::create_directories(dir);
  return dir.string();
}

std::string cmd_augment(const RunConfig& config) {
  if (config.threads > 0) set_max_threads(config.threads);
  const fs::path dir = resolve_run_dir(config);

  auto pipeline = fit_pipeline(config);
  AugmentStats stats;
  const auto samples =
      augment(pipeline.dataset, pipeline.manifold, pipeline.relevance,
              pipeline.density, pipeline.aug, pipeline.decompositions, &stats);

  write_synthetic_jsonl((dir / "synthetic.jsonl").string(), samples);
  pipeline.manifold.regressor.save((dir / "model.json").string());

  const auto original_stats = structural_stats(pipeline.dataset.graphs());
  StructuralStats synth_stats;
  if (!samples.empty()) {
    std::vector<Graph> synth_graphs;
    for (const auto& s : samples) synth_graphs.push_back(s.graph);
    synth_stats = structural_stats(synth_graphs);
  }
  write_text(dir / "stats.csv", stats_csv(original_stats, synth_stats));
  write_config_echo(dir, config);

  std::cout << "generated " << stats.kept << "/" << stats.requested
            << " synthetic samples (skipped " << stats.skipped << ") into "
            << dir.string() << "\n";
  return dir.string();
}

std::string cmd_evaluate(const RunConfig& config) {
  if (config.threads > 0) set_max_threads(config.threads);
  const fs::path dir = resolve_run_dir(config);

  Dataset dataset =
      load_csv(config.dataset_path, config.smiles_col, config.target_col);
  const auto report = run_experiment(dataset, config.exp);

  write_text(dir / "report.json",
             report.to_json(config.echo_json()).dump(2) + "\n");
  write_config_echo(dir, config);

  if (config.emit_svg && !report.folds.empty()) {
    fs::create_directories(dir / "plots");
    const int bins = static_cast<int>(report.folds.front().baseline.per_bin.size());
    std::vector<std::string> labels;
    svg::Series base{"baseline", "#1f77b4", {}, {}};
    svg::Series smh_series{"augmented", "#d62728", {}, {}};
    for (int b = 0; b < bins; ++b) {
      const auto& bin = report.folds.front().baseline.per_bin[b];
      labels.push_back(fmt(0.5 * (bin.lo + bin.hi)));
      double base_mse = 0.0, smh_mse = 0.0;
      for (const auto& f : report.folds) {
        base_mse += f.baseline.per_bin[b].mse;
        smh_mse += f.smh.per_bin[b].mse;
      }
      base.y.push_back(base_mse / static_cast<double>(report.folds.size()));
      smh_series.y.push_back(smh_mse / static_cast<double>(report.folds.size()));
    }
    write_text(dir / "plots" / "bins.svg",
               svg::bar_chart(labels, {base, smh_series},
                              "per-bin test MSE (mean over folds)"));
  }

  std::cout << report.table();
  std::cout << "report written to " << (dir / "report.json").string() << "\n";
  return dir.string();
}

std::string cmd_stats(const RunConfig& config, const std::string& original,
                      const std::string& synthetic) {
  const auto original_graphs = load_graphs_any(config, original);
  const auto synthetic_graphs = load_graphs_any(config, synthetic);
  const auto a = structural_stats(original_graphs);
  const auto b = structural_stats(synthetic_graphs);

  const std::string csv = stats_csv(a, b);
  std::cout << csv;

  std::string dir;
  if (!config.out_dir.empty()) {
    dir = resolve_run_dir(config);
    write_text(fs::path(dir) / "stats.csv", csv);
    write_config_echo(dir, config);
  }
  return dir;
}

std::string cmd_relevance_plot(const RunConfig& config) {
  if (config.threads > 0) set_max_threads(config.threads);
  const fs::path dir = resolve_run_dir(config);

  Dataset dataset =
      load_csv(config.dataset_path, config.smiles_col, config.target_col);
  const auto targets = dataset.targets();
  const auto relevance = config.exp.make_relevance(targets);
  const auto density = DensityEstimate::fit(targets);

  const double lo = *std::min_element(targets.begin(), targets.end());
  const double hi = *std::max_element(targets.begin(), targets.end());
  const int points = config.plot_points;

  std::vector<double> ys(points);
  for (int i = 0; i < points; ++i) {
    ys[i] = lo + (hi - lo) * static_cast<double>(i) /
                     static_cast<double>(points - 1);
  }
  ys.front() = lo;  // pin the endpoints exactly
  ys.back() = hi;
  const auto densities = density.eval_grid(ys);

  std::ostringstream os;
  os << "y,phi,density,weight\n";
  std::vector<double> phis(points), weights(points);
  for (int i = 0; i < points; ++i) {
    phis[i] = relevance(ys[i]);
    weights[i] =
        sampling_weight(relevance, density, ys[i], config.exp.aug.eps);
    os << fmt(ys[i]) << ',' << fmt(phis[i]) << ',' << fmt(densities[i]) << ','
       << fmt(weights[i]) << '\n';
  }
  write_text(dir / "relevance.csv", os.str());
  write_config_echo(dir, config);

  if (config.emit_svg) {
    fs::create_directories(dir / "plots");
    const double wmax = *std::max_element(weights.begin(), weights.end());
    std::vector<double> scaled = weights;
    if (wmax > 0) {
      for (double& w : scaled) w /= wmax;
    }
    const double dmax = *std::max_element(densities.begin(), densities.end());
    std::vector<double> dscaled = densities;
    if (dmax > 0) {
      for (double& d : dscaled) d /= dmax;
    }
    write_text(dir / "plots" / "relevance.svg",
               svg::line_plot({{"phi", "#1f77b4", ys, phis},
                               {"density (scaled)", "#2ca02c", ys, dscaled},
                               {"weight (scaled)", "#d62728", ys, scaled}},
                              "relevance, density, sampling weight"));
  }

  std::cout << "relevance grid written to " << (dir / "relevance.csv").string()
            << "\n";
  return dir.string();
}

}  // namespace smh
