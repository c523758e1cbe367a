//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "smh/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include <nlohmann/json.hpp>

#include "smh/error.hpp"
#include "smh/parallel.hpp"
#include "smh/rng.hpp"

namespace smh {

void AugmentationConfig::validate() const {
  if (!(sampling_fraction > 0.0 && sampling_fraction <= 1.0)) {
    throw Error("sampling_fraction must be in (0, 1]");
  }
  if (!(binarization_cutoff > 0.0 && binarization_cutoff < 1.0)) {
    throw Error("binarization_cutoff must be in (0, 1)");
  }
  if (gamma <= 0.0) throw Error("gamma must be positive");
  if (eps <= 0.0) throw Error("eps must be positive");
  if (k < 1) throw Error("k must be >= 1");
  if (retry_budget < 0) throw Error("retry_budget must be >= 0");
  if (cov_ridge < 0.0) throw Error("cov_ridge must be >= 0");
}

std::vector<double> sample_targets(
    const std::function<double(double)>& weight_fn,
    const std::vector<double>& train_targets, int count, double jitter_sd,
    std::uint64_t seed) {
  if (count < 1) throw Error("sample_targets: count must be >= 1");
  const int n = static_cast<int>(train_targets.size());
  std::vector<double> cumulative(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double w = weight_fn(train_targets[i]);
    if (!(w >= 0.0)) throw Error("sample_targets: negative weight");
    total += w;
    cumulative[i] = total;
  }
  if (total <= 0.0) {
    throw AllZeroWeightsError("every training target has zero weight");
  }

  Rng rng(seed);
  std::vector<double> out(count);
  for (int s = 0; s < count; ++s) {
    const double u = rng.uniform() * total;
    const auto it =
        std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const int idx = std::min(static_cast<int>(it - cumulative.begin()), n - 1);
    double y = train_targets[idx];
    if (jitter_sd > 0.0) y += jitter_sd * rng.normal();
    out[s] = y;
  }
  return out;
}

int select_seed_graph(const std::vector<double>& targets, double y_new) {
  int best = 0;
  double best_dist = std::abs(y_new - targets[0]);
  for (int i = 1; i < static_cast<int>(targets.size()); ++i) {
    const double d = std::abs(y_new - targets[i]);
    if (d < best_dist) {  // strict: ties keep the smaller index
      best_dist = d;
      best = i;
    }
  }
  return best;
}

namespace {

// Scores below the eigensolver's reconstruction error count as exact zero;
// real edge scores are at least 1/n (entries of D^{-1/2} A D^{-1/2}).
constexpr double kScoreSnap = 1e-8;

double sigmoid(double v) { return 1.0 / (1.0 + std::exp(-v)); }

bool edge_from_score(double score, double cutoff) {
  if (std::abs(score) < kScoreSnap) score = 0.0;
  return sigmoid(score) > cutoff;
}

}  // namespace

Graph reconstruct_graph(const SpectralDecomposition& basis,
                        const SpectralEmbedding& spectrum, double cutoff,
                        const std::vector<std::string>& labels,
                        int seed_graph_index) {
  const int n = static_cast<int>(basis.eigenvalues.size());
  if (static_cast<int>(labels.size()) != n) {
    throw DimensionMismatch("reconstruct_graph: labels do not match basis");
  }
  const int used = std::min<int>(n, static_cast<int>(spectrum.coefficients.size()));

  Eigen::MatrixXd score(n, n);
  if (spectrum.mode == SpectralMode::gft_coefficients) {
    Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(n);
    coeffs.head(used) = spectrum.coefficients.head(used);
    const Eigen::VectorXd x = basis.eigenvectors * coeffs;
    score = x * x.transpose();
  } else {
    Eigen::VectorXd lambda = basis.eigenvalues;  // seed values pad the tail
    lambda.head(used) = spectrum.coefficients.head(used);
    const Eigen::MatrixXd l_tilde = basis.eigenvectors *
                                    lambda.asDiagonal() *
                                    basis.eigenvectors.transpose();
    score = Eigen::MatrixXd::Identity(n, n) - l_tilde;
  }

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (edge_from_score(score(i, j), cutoff)) edges.emplace_back(i, j);
    }
  }
  if (edges.empty()) {
    throw EmptyGraphError("no edge survives the binarization cutoff");
  }

  std::vector<int> degree(n, 0);
  for (const auto& [a, b] : edges) {
    ++degree[a];
    ++degree[b];
  }
  std::vector<int> remap(n, -1);
  std::vector<std::string> kept_labels;
  for (int v = 0; v < n; ++v) {
    if (degree[v] > 0) {
      remap[v] = static_cast<int>(kept_labels.size());
      kept_labels.push_back(labels[v]);
    }
  }
  for (auto& [a, b] : edges) {
    a = remap[a];
    b = remap[b];
  }
  const int kept = static_cast<int>(kept_labels.size());
  return Graph(kept, std::move(edges), std::move(kept_labels),
               Provenance::synthetic, seed_graph_index);
}

std::vector<SyntheticSample> augment(
    const Dataset& dataset, const ManifoldModel& model,
    const RelevanceFunction& relevance, const DensityEstimate& density,
    const AugmentationConfig& config,
    const std::vector<SpectralDecomposition>& decompositions,
    AugmentStats* stats) {
  config.validate();
  if (dataset.size() == 0) throw EmptyDatasetError("augment: empty dataset");
  if (decompositions.size() != dataset.records.size()) {
    throw LengthMismatch("augment: decomposition cache does not match dataset");
  }

  const auto targets = dataset.targets();
  const int count = static_cast<int>(
      std::llround(config.sampling_fraction * static_cast<double>(targets.size())));
  AugmentStats local;
  local.requested = count;
  if (count < 1) {
    if (stats) *stats = local;
    return {};
  }

  const double jitter_sd = config.target_jitter ? density.bandwidth() : 0.0;
  const auto new_targets = sample_targets(
      [&](double y) { return sampling_weight(relevance, density, y, config.eps); },
      targets, count, jitter_sd, derive_seed(config.master_seed, 1));

  std::vector<std::optional<SyntheticSample>> slots(count);

  parallel_for_index(count, [&](int s) {
    const double y_new = new_targets[s];
    const int seed_idx = select_seed_graph(targets, y_new);
    const auto& basis = decompositions[seed_idx];
    const auto& seed_graph = dataset.records[seed_idx].graph;
    const auto conditional = prepare_conditional(model, y_new);

    for (int attempt = 0; attempt <= config.retry_budget; ++attempt) {
      // first draw uses the documented master_seed + index stream
      const std::uint64_t draw_seed =
          attempt == 0
              ? config.master_seed + static_cast<std::uint64_t>(s)
              : derive_seed(config.master_seed,
                            0x100000ULL + static_cast<std::uint64_t>(s) * 64 +
                                static_cast<std::uint64_t>(attempt));
      auto spectrum = conditional.sample(draw_seed);
      try {
        Graph g = reconstruct_graph(basis, spectrum, config.binarization_cutoff,
                                    seed_graph.node_labels(), seed_idx);
        slots[s] = SyntheticSample{std::move(g), y_new, std::move(spectrum),
                                   seed_idx};
        break;
      } catch (const EmptyGraphError&) {
        // redraw the spectrum up to the retry budget
      }
    }
  });

  std::vector<SyntheticSample> out;
  out.reserve(count);
  for (int s = 0; s < count; ++s) {
    if (slots[s]) {
      out.push_back(std::move(*slots[s]));
      ++local.kept;
    } else {
      ++local.skipped;
    }
  }
  if (local.skipped > 0) {
    std::cerr << "[smh] warning: " << local.skipped
              << " synthetic sample(s) dropped after empty reconstructions\n";
  }
  if (stats) *stats = local;
  return out;
}

void write_synthetic_jsonl(const std::string& path,
                           const std::vector<SyntheticSample>& samples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  for (const auto& s : samples) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : s.graph.edges()) {
      edges.push_back({a, b});
    }
    const nlohmann::json j = {{"target", s.target},
                              {"seed_index", s.seed_graph_index},
                              {"nodes", s.graph.node_labels()},
                              {"edges", std::move(edges)}};
    out << j.dump() << '\n';
  }
}

std::vector<SyntheticRecord> load_synthetic_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::vector<SyntheticRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      std::vector<std::string> labels =
          j.at("nodes").get<std::vector<std::string>>();
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : j.at("edges")) {
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      }
      const int node_count = static_cast<int>(labels.size());
      Graph g(node_count, std::move(edges), std::move(labels),
              Provenance::synthetic, j.value("seed_index", -1));
      out.push_back(SyntheticRecord{std::move(g), j.at("target").get<double>(),
                                    j.value("seed_index", -1)});
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad synthetic record on line ") +
                           std::to_string(line_no) + ": " + e.what(),
                       0);
    }
  }
  if (out.empty()) throw EmptyDatasetError("no synthetic records in " + path);
  return out;
}

}  // namespace smh
