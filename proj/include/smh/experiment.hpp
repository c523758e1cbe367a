//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_EXPERIMENT_HPP_
#define SMH_EXPERIMENT_HPP_

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "smh/dataset.hpp"
#include "smh/metrics.hpp"
#include "smh/reconstruct.hpp"
#include "smh/spectral_map.hpp"

namespace smh {

struct ExperimentConfig {
  AugmentationConfig aug;
  TreeHyper spectrum_hyper;
  TreeHyper downstream_hyper{100, 0.1, 3, 1.0};
  HyperGrid grid;              // used when grid_search is on
  bool grid_search = false;    // enumerate the grid, scored by validation SERA
  int folds = 5;
  int downstream_k = 8;        // eigenvalues in the downstream features
  int bins = 10;
  int sera_grid = 1001;
  // expert relevance override; empty = per-fold extremes construction
  std::vector<std::pair<double, double>> relevance_points;

  RelevanceFunction make_relevance(const std::vector<double>& targets) const;
};

struct FoldResult {
  int fold = 0;
  int train_size = 0;
  int test_size = 0;
  int k_effective = 0;
  int synthetic_requested = 0;
  int synthetic_kept = 0;
  MetricReport baseline;
  MetricReport smh;
  StructuralStats train_stats;
  StructuralStats synthetic_stats;
  double train_phi_ge_half = 0.0;  // fraction of phi(y) >= 0.5
  double synth_phi_ge_half = 0.0;
  std::vector<int> train_indices;  // in-memory bookkeeping, not serialized
  std::vector<int> test_indices;
};

struct MetricAggregate {
  double sera_mean = 0, sera_std = 0;
  double mae_mean = 0, mae_std = 0;
  double rmse_mean = 0, rmse_std = 0;
  double r2_mean = 0, r2_std = 0;
};

struct ExperimentReport {
  std::string dataset_name;
  int dataset_size = 0;
  std::vector<FoldResult> folds;
  MetricAggregate baseline;
  MetricAggregate smh;

  nlohmann::json to_json(const nlohmann::json& config_echo) const;
  std::string table() const;  // human-readable summary
};

/// 5-fold (configurable) cross-validated comparison of a baseline
/// downstream regressor against the same regressor trained on the
/// synthetically augmented split. Relevance, KDE, the spectrum regressor,
/// and the manifold are fit per fold on the training split only; test rows
/// never receive synthetic data. A failing fold aborts with its index.
ExperimentReport run_experiment(const Dataset& dataset,
                                const ExperimentConfig& config);

}  // namespace smh

#endif  // SMH_EXPERIMENT_HPP_
