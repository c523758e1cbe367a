//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "smh/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "smh/error.hpp"
#include "smh/manifold.hpp"
#include "smh/rng.hpp"

namespace smh {

RelevanceFunction ExperimentConfig::make_relevance(
    const std::vector<double>& targets) const {
  if (!relevance_points.empty()) {
    return RelevanceFunction::from_control_points(relevance_points);
  }
  return RelevanceFunction::extremes(targets);
}

namespace {

std::vector<std::vector<int>> make_folds(int n, int folds, std::uint64_t seed) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  for (int i = n - 1; i > 0; --i) {  // Fisher-Yates
    const int j = rng.uniform_int(i + 1);
    std::swap(order[i], order[j]);
  }
  std::vector<std::vector<int>> out(folds);
  for (int i = 0; i < n; ++i) out[i % folds].push_back(order[i]);
  for (auto& f : out) std::sort(f.begin(), f.end());
  return out;
}

MetricReport evaluate(const std::vector<double>& y_true,
                      const std::vector<double>& y_pred,
                      const RelevanceFunction& relevance, double range_lo,
                      double range_hi, int bins, int sera_grid) {
  MetricReport r;
  r.sera = sera(y_true, y_pred, relevance, sera_grid);
  std::tie(r.mae, r.rmse, r.r2) = standard_metrics(y_true, y_pred);
  r.per_bin = per_bin_errors(y_true, y_pred, range_lo, range_hi, bins);
  return r;
}

double phi_fraction_ge(const RelevanceFunction& relevance,
                       const std::vector<double>& ys, double threshold) {
  if (ys.empty()) return 0.0;
  int hits = 0;
  for (const double y : ys) {
    if (relevance(y) >= threshold) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(ys.size());
}

void accumulate(MetricAggregate& agg, const std::vector<double>& v,
                double MetricAggregate::*mean, double MetricAggregate::*std_) {
  const double n = static_cast<double>(v.size());
  const double m = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double ss = 0.0;
  for (const double x : v) ss += (x - m) * (x - m);
  agg.*mean = m;
  agg.*std_ = std::sqrt(ss / n);  // population, matching StructuralStats
}

MetricAggregate aggregate(const std::vector<FoldResult>& folds,
                          const MetricReport FoldResult::*which) {
  std::vector<double> se, ma, rm, r2;
  for (const auto& f : folds) {
    se.push_back((f.*which).sera);
    ma.push_back((f.*which).mae);
    rm.push_back((f.*which).rmse);
    r2.push_back((f.*which).r2);
  }
  MetricAggregate agg;
  accumulate(agg, se, &MetricAggregate::sera_mean, &MetricAggregate::sera_std);
  accumulate(agg, ma, &MetricAggregate::mae_mean, &MetricAggregate::mae_std);
  accumulate(agg, rm, &MetricAggregate::rmse_mean, &MetricAggregate::rmse_std);
  accumulate(agg, r2, &MetricAggregate::r2_mean, &MetricAggregate::r2_std);
  return agg;
}

FoldResult run_fold(const Dataset& dataset,
                    const std::vector<SpectralDecomposition>& decomps,
                    const std::vector<int>& test_idx,
                    const ExperimentConfig& config, int fold) {
  const int n = dataset.size();
  std::vector<char> in_test(n, 0);
  for (const int i : test_idx) in_test[i] = 1;
  std::vector<int> train_idx;
  for (int i = 0; i < n; ++i) {
    if (!in_test[i]) train_idx.push_back(i);
  }

  // leakage guard: the split must partition the dataset
  for (const int i : train_idx) {
    if (in_test[i]) throw Error("fold split leaked a test row");
  }
  if (train_idx.size() + test_idx.size() != static_cast<std::size_t>(n)) {
    throw Error("fold split does not cover the dataset");
  }

  Dataset train;
  train.name = dataset.name;
  std::vector<SpectralDecomposition> train_decomps;
  for (const int i : train_idx) {
    train.records.push_back(dataset.records[i]);
    train_decomps.push_back(decomps[i]);
  }

  const auto train_targets = train.targets();
  const auto relevance = config.make_relevance(train_targets);
  const auto density = DensityEstimate::fit(train_targets);

  AugmentationConfig aug = config.aug;
  aug.master_seed = derive_seed(config.aug.master_seed, 100 + fold);
  const int k_eff = std::min(aug.k, train.min_node_count());
  aug.k = k_eff;

  std::vector<SpectralEmbedding> embeddings;
  embeddings.reserve(train.size());
  for (const auto& d : train_decomps) {
    embeddings.push_back(embed(d, k_eff, aug.spectral_mode));
  }

  TreeHyper spectrum_hyper = config.spectrum_hyper;
  if (config.grid_search && !config.grid.single()) {
    spectrum_hyper = select_spectrum_hyper(train_targets, embeddings, relevance,
                                           config.grid, aug.master_seed);
  }
  auto regressor = SpectrumRegressor::fit(train_targets, embeddings, relevance,
                                          spectrum_hyper, aug.master_seed);
  const auto manifold = make_manifold(std::move(regressor), train_targets,
                                      embeddings, aug.gamma, aug.cov_ridge);

  AugmentStats stats;
  const auto synthetic =
      augment(train, manifold, relevance, density, aug, train_decomps, &stats);

  std::vector<Graph> base_graphs = train.graphs();
  std::vector<double> base_targets = train_targets;
  std::vector<Graph> smh_graphs = base_graphs;
  std::vector<double> smh_targets = base_targets;
  std::vector<Graph> synth_graphs;
  std::vector<double> synth_targets;
  for (const auto& s : synthetic) {
    smh_graphs.push_back(s.graph);
    smh_targets.push_back(s.target);
    synth_graphs.push_back(s.graph);
    synth_targets.push_back(s.target);
  }

  const std::uint64_t downstream_seed = derive_seed(aug.master_seed, 7);
  const auto baseline_model =
      DownstreamModel::fit(base_graphs, base_targets, config.downstream_k,
                           config.downstream_hyper, downstream_seed);
  const auto smh_model =
      DownstreamModel::fit(smh_graphs, smh_targets, config.downstream_k,
                           config.downstream_hyper, downstream_seed);

  std::vector<Graph> test_graphs;
  std::vector<double> test_targets;
  for (const int i : test_idx) {
    test_graphs.push_back(dataset.records[i].graph);
    test_targets.push_back(dataset.records[i].target);
  }
  const auto base_pred = baseline_model.predict_batch(test_graphs);
  const auto smh_pred = smh_model.predict_batch(test_graphs);

  const double lo = *std::min_element(train_targets.begin(), train_targets.end());
  const double hi = *std::max_element(train_targets.begin(), train_targets.end());

  FoldResult r;
  r.fold = fold;
  r.train_size = train.size();
  r.test_size = static_cast<int>(test_idx.size());
  r.k_effective = k_eff;
  r.synthetic_requested = stats.requested;
  r.synthetic_kept = stats.kept;
  r.baseline = evaluate(test_targets, base_pred, relevance, lo, hi,
                        config.bins, config.sera_grid);
  r.smh = evaluate(test_targets, smh_pred, relevance, lo, hi, config.bins,
                   config.sera_grid);
  r.train_stats = structural_stats(base_graphs);
  if (!synth_graphs.empty()) r.synthetic_stats = structural_stats(synth_graphs);
  r.train_phi_ge_half = phi_fraction_ge(relevance, train_targets, 0.5);
  r.synth_phi_ge_half = phi_fraction_ge(relevance, synth_targets, 0.5);
  r.train_indices = train_idx;
  r.test_indices = test_idx;
  return r;
}

nlohmann::json bin_json(const std::vector<BinError>& bins) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& b : bins) {
    arr.push_back({{"lo", b.lo}, {"hi", b.hi}, {"mse", b.mse}, {"count", b.count}});
  }
  return arr;
}

nlohmann::json metric_json(const MetricReport& m) {
  return {{"sera", m.sera}, {"mae", m.mae},       {"rmse", m.rmse},
          {"r2", m.r2},     {"bins", bin_json(m.per_bin)}};
}

nlohmann::json stats_json(const StructuralStats& s) {
  return {{"node_mean", s.node_mean},       {"node_std", s.node_std},
          {"edge_mean", s.edge_mean},       {"edge_std", s.edge_std},
          {"density_mean", s.density_mean}, {"density_std", s.density_std},
          {"count", s.count}};
}

nlohmann::json agg_json(const MetricAggregate& a) {
  return {{"sera", {{"mean", a.sera_mean}, {"std", a.sera_std}}},
          {"mae", {{"mean", a.mae_mean}, {"std", a.mae_std}}},
          {"rmse", {{"mean", a.rmse_mean}, {"std", a.rmse_std}}},
          {"r2", {{"mean", a.r2_mean}, {"std", a.r2_std}}}};
}

}  // namespace

ExperimentReport run_experiment(const Dataset& dataset,
                                const ExperimentConfig& config) {
  const int n = dataset.size();
  if (config.folds < 2) throw Error("folds must be >= 2");
  if (n < config.folds) throw InsufficientDataError("dataset smaller than fold count");

  const auto fold_sets =
      make_folds(n, config.folds, derive_seed(config.aug.master_seed, 11));

  ExperimentReport report;
  report.dataset_name = dataset.name;
  report.dataset_size = n;

  const auto decomps = spectral_decompose_all(dataset.graphs());

  for (int f = 0; f < config.folds; ++f) {
    try {
      report.folds.push_back(run_fold(dataset, decomps, fold_sets[f], config, f));
    } catch (const Error& e) {
      throw Error("fold " + std::to_string(f) + " failed: " + e.what());
    }
  }

  report.baseline = aggregate(report.folds, &FoldResult::baseline);
  report.smh = aggregate(report.folds, &FoldResult::smh);
  return report;
}

nlohmann::json ExperimentReport::to_json(const nlohmann::json& config_echo) const {
  nlohmann::json folds_json = nlohmann::json::array();
  for (const auto& f : folds) {
    folds_json.push_back({{"fold", f.fold},
                          {"train_size", f.train_size},
                          {"test_size", f.test_size},
                          {"k_effective", f.k_effective},
                          {"synthetic_requested", f.synthetic_requested},
                          {"synthetic_kept", f.synthetic_kept},
                          {"baseline", metric_json(f.baseline)},
                          {"smh", metric_json(f.smh)},
                          {"train_stats", stats_json(f.train_stats)},
                          {"synthetic_stats", stats_json(f.synthetic_stats)},
                          {"train_phi_ge_half", f.train_phi_ge_half},
                          {"synth_phi_ge_half", f.synth_phi_ge_half}});
  }
  return {{"dataset", dataset_name},
          {"size", dataset_size},
          {"config", config_echo},
          {"folds", std::move(folds_json)},
          {"baseline", agg_json(baseline)},
          {"smh", agg_json(smh)}};
}

std::string ExperimentReport::table() const {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(4);
  os << "dataset: " << dataset_name << " (" << dataset_size << " records, "
     << folds.size() << " folds)\n";
  os << "metric        baseline                smh\n";
  auto line = [&os](const char* name, double bm, double bs, double sm,
                    double ss) {
    os << name << bm << " +/- " << bs << "     " << sm << " +/- " << ss << "\n";
  };
  line("SERA     ", baseline.sera_mean, baseline.sera_std, smh.sera_mean,
       smh.sera_std);
  line("MAE      ", baseline.mae_mean, baseline.mae_std, smh.mae_mean,
       smh.mae_std);
  line("RMSE     ", baseline.rmse_mean, baseline.rmse_std, smh.rmse_mean,
       smh.rmse_std);
  line("R2       ", baseline.r2_mean, baseline.r2_std, smh.r2_mean,
       smh.r2_std);

  double synth = 0.0, train_frac = 0.0, synth_frac = 0.0;
  for (const auto& f : folds) {
    synth += f.synthetic_kept;
    train_frac += f.train_phi_ge_half;
    synth_frac += f.synth_phi_ge_half;
  }
  const double nf = static_cast<double>(folds.size());
  os << "synthetic samples/fold: " << synth / nf
     << "; phi>=0.5 fraction train " << train_frac / nf << " vs synthetic "
     << synth_frac / nf << "\n";
  return os.str();
}

}  // namespace smh
