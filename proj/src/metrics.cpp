//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "smh/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "smh/error.hpp"
#include "smh/parallel.hpp"
#include "smh/spectral.hpp"

namespace smh {

double sera_from_components(const std::vector<double>& squared_errors,
                            const std::vector<double>& phi, int grid_size) {
  if (squared_errors.size() != phi.size()) {
    throw LengthMismatch("sera: component lengths disagree");
  }
  if (grid_size < 2) throw Error("sera: grid_size must be >= 2");
  const int n = static_cast<int>(phi.size());

  // sort by relevance descending; prefix sums give SER_t in O(log n) per t
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&phi](int a, int b) { return phi[a] > phi[b]; });
  std::vector<double> sorted_phi(n), prefix(n + 1, 0.0);
  for (int i = 0; i < n; ++i) {
    sorted_phi[i] = phi[order[i]];
    prefix[i + 1] = prefix[i] + squared_errors[order[i]];
  }

  auto ser = [&](double t) {
    // number of samples with phi >= t
    const auto it = std::lower_bound(sorted_phi.begin(), sorted_phi.end(), t,
                                     [](double v, double key) { return v >= key; });
    return prefix[it - sorted_phi.begin()];
  };

  const double dt = 1.0 / static_cast<double>(grid_size - 1);
  double integral = 0.0;
  double prev = ser(0.0);
  for (int g = 1; g < grid_size; ++g) {
    const double cur = ser(static_cast<double>(g) * dt);
    integral += 0.5 * (prev + cur) * dt;
    prev = cur;
  }
  return integral;
}

double sera(const std::vector<double>& y_true,
            const std::vector<double>& y_pred,
            const RelevanceFunction& relevance, int grid_size) {
  if (y_true.size() != y_pred.size()) {
    throw LengthMismatch("sera: y_true/y_pred lengths disagree");
  }
  if (y_true.empty()) throw LengthMismatch("sera: empty input");
  const int n = static_cast<int>(y_true.size());
  std::vector<double> sq(n), phi(n);
  for (int i = 0; i < n; ++i) {
    const double e = y_pred[i] - y_true[i];
    sq[i] = e * e;
    phi[i] = relevance(y_true[i]);
  }
  return sera_from_components(sq, phi, grid_size);
}

std::tuple<double, double, double> standard_metrics(
    const std::vector<double>& y_true, const std::vector<double>& y_pred) {
  if (y_true.size() != y_pred.size()) {
    throw LengthMismatch("standard_metrics: lengths disagree");
  }
  const int n = static_cast<int>(y_true.size());
  if (n < 2) throw InsufficientDataError("standard_metrics: need N >= 2");

  double abs_sum = 0.0, sq_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double e = y_pred[i] - y_true[i];
    abs_sum += std::abs(e);
    sq_sum += e * e;
  }
  const double mae = abs_sum / n;
  const double rmse = std::sqrt(sq_sum / n);

  const double mean =
      std::accumulate(y_true.begin(), y_true.end(), 0.0) / n;
  double ss_tot = 0.0;
  for (const double y : y_true) ss_tot += (y - mean) * (y - mean);
  if (ss_tot == 0.0) {
    throw DegenerateTargetsError("R^2 undefined: zero target variance");
  }
  const double r2 = 1.0 - sq_sum / ss_tot;
  return {mae, rmse, r2};
}

std::vector<BinError> per_bin_errors(const std::vector<double>& y_true,
                                     const std::vector<double>& y_pred,
                                     double range_lo, double range_hi,
                                     int bins) {
  if (y_true.size() != y_pred.size()) {
    throw LengthMismatch("per_bin_errors: lengths disagree");
  }
  if (bins < 1 || range_hi <= range_lo) {
    throw Error("per_bin_errors: bad bin configuration");
  }
  std::vector<BinError> out(bins);
  const double width = (range_hi - range_lo) / bins;
  for (int b = 0; b < bins; ++b) {
    out[b].lo = range_lo + b * width;
    out[b].hi = range_lo + (b + 1) * width;
  }
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    int b = static_cast<int>((y_true[i] - range_lo) / width);
    b = std::clamp(b, 0, bins - 1);
    const double e = y_pred[i] - y_true[i];
    out[b].mse += e * e;
    ++out[b].count;
  }
  for (auto& bin : out) {
    if (bin.count > 0) bin.mse /= bin.count;
  }
  return out;
}

namespace {

std::pair<double, double> mean_std(const std::vector<double>& v) {
  const double n = static_cast<double>(v.size());
  if (v.empty()) return {0.0, 0.0};
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double ss = 0.0;
  for (const double x : v) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / n)};  // population
}

}  // namespace

StructuralStats structural_stats(const std::vector<Graph>& graphs) {
  if (graphs.empty()) throw EmptyCollectionError("structural_stats: no graphs");
  std::vector<double> nodes, edges, densities;
  for (const auto& g : graphs) {
    nodes.push_back(g.node_count());
    edges.push_back(g.edge_count());
    if (g.node_count() >= 2) densities.push_back(g.density());
  }
  StructuralStats s;
  std::tie(s.node_mean, s.node_std) = mean_std(nodes);
  std::tie(s.edge_mean, s.edge_std) = mean_std(edges);
  std::tie(s.density_mean, s.density_std) = mean_std(densities);
  s.count = static_cast<int>(graphs.size());
  s.density_count = static_cast<int>(densities.size());
  return s;
}

Eigen::RowVectorXd graph_features(const Graph& g, int k) {
  const auto deg = g.degrees();
  const double n = static_cast<double>(g.node_count());
  double dmean = 0.0;
  for (const int d : deg) dmean += d;
  dmean /= n;
  double dvar = 0.0;
  for (const int d : deg) dvar += (d - dmean) * (d - dmean);
  const double dstd = std::sqrt(dvar / n);

  Eigen::RowVectorXd f = Eigen::RowVectorXd::Zero(5 + k);
  f(0) = n;
  f(1) = g.edge_count();
  f(2) = g.density();
  f(3) = dmean;
  f(4) = dstd;

  const auto decomp = spectral_decompose(g);
  const int take = std::min<int>(k, g.node_count());
  for (int i = 0; i < take; ++i) f(5 + i) = decomp.eigenvalues(i);
  return f;
}

DownstreamModel DownstreamModel::fit(const std::vector<Graph>& graphs,
                                     const std::vector<double>& targets,
                                     int k, const TreeHyper& hyper,
                                     std::uint64_t seed) {
  if (graphs.empty()) throw InsufficientDataError("downstream: empty training set");
  if (graphs.size() != targets.size()) {
    throw LengthMismatch("downstream: graphs/targets disagree");
  }
  const int n = static_cast<int>(graphs.size());
  Eigen::MatrixXd features(n, 5 + k);
  parallel_for_index(n, [&](int i) { features.row(i) = graph_features(graphs[i], k); });
  DownstreamModel m;
  m.k_ = k;
  m.seed_ = seed;
  m.model_ = GradientBoostedTrees::fit(features, targets,
                                       std::vector<double>(n, 1.0), hyper);
  return m;
}

double DownstreamModel::predict(const Graph& g) const {
  return model_.predict(graph_features(g, k_));
}

std::vector<double> DownstreamModel::predict_batch(
    const std::vector<Graph>& graphs) const {
  const int n = static_cast<int>(graphs.size());
  std::vector<double> out(n);
  parallel_for_index(n, [&](int i) { out[i] = predict(graphs[i]); });
  return out;
}

}  // namespace smh
