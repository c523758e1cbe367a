//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_METRICS_HPP_
#define SMH_METRICS_HPP_

#include <cstdint>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "smh/graph.hpp"
#include "smh/relevance.hpp"
#include "smh/trees.hpp"

namespace smh {

/// Squared error-relevance area: the trapezoidal integral over t in [0, 1]
/// of SER_t = sum of squared errors restricted to samples with phi(y) >= t.
/// No normalization is applied.
double sera(const std::vector<double>& y_true,
            const std::vector<double>& y_pred,
            const RelevanceFunction& relevance, int grid_size = 1001);

/// SERA from precomputed per-sample squared errors and relevance values.
double sera_from_components(const std::vector<double>& squared_errors,
                            const std::vector<double>& phi, int grid_size);

/// (MAE, RMSE, R^2). R^2 needs length >= 2 and non-degenerate y_true.
std::tuple<double, double, double> standard_metrics(
    const std::vector<double>& y_true, const std::vector<double>& y_pred);

struct BinError {
  double lo = 0.0;
  double hi = 0.0;
  double mse = 0.0;
  int count = 0;
};

/// Mean squared error over `bins` equal-width target bins spanning
/// [range_lo, range_hi]; values outside clamp into the end bins.
std::vector<BinError> per_bin_errors(const std::vector<double>& y_true,
                                     const std::vector<double>& y_pred,
                                     double range_lo, double range_hi,
                                     int bins = 10);

struct MetricReport {
  double sera = 0.0;
  double mae = 0.0;
  double rmse = 0.0;
  double r2 = 0.0;
  std::vector<BinError> per_bin;
};

struct StructuralStats {
  double node_mean = 0.0, node_std = 0.0;
  double edge_mean = 0.0, edge_std = 0.0;
  double density_mean = 0.0, density_std = 0.0;
  int count = 0;
  int density_count = 0;  // graphs with n >= 2
};

/// Population mean/std of node count, edge count, and density. Graphs with
/// a single node are excluded from the density statistics.
StructuralStats structural_stats(const std::vector<Graph>& graphs);

/// Fixed-length spectral-topological descriptor:
/// [n, |E|, density, mean degree, degree std, k smallest eigenvalues
/// (zero-padded)].
Eigen::RowVectorXd graph_features(const Graph& g, int k);

/// Downstream property regressor: boosted trees over graph_features with
/// uniform weights. A stand-in for a heavyweight graph network at desk
/// scale.
class DownstreamModel {
 public:
  static DownstreamModel fit(const std::vector<Graph>& graphs,
                             const std::vector<double>& targets, int k,
                             const TreeHyper& hyper, std::uint64_t seed);

  double predict(const Graph& g) const;
  std::vector<double> predict_batch(const std::vector<Graph>& graphs) const;

  int feature_eigenvalues() const { return k_; }
  std::uint64_t seed() const { return seed_; }

 private:
  GradientBoostedTrees model_;
  int k_ = 0;
  std::uint64_t seed_ = 0;
};

}  // namespace smh

#endif  // SMH_METRICS_HPP_
