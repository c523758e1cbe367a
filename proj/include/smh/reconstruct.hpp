//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_RECONSTRUCT_HPP_
#define SMH_RECONSTRUCT_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "smh/dataset.hpp"
#include "smh/manifold.hpp"
#include "smh/relevance.hpp"
#include "smh/spectral.hpp"
#include "smh/spectral_map.hpp"

namespace smh {

struct AugmentationConfig {
  double sampling_fraction = 0.10;  // of the training size
  // sigmoid threshold on edge scores. In eigenvalues mode non-edges score
  // sigmoid(~0) = 0.5, so the default sits just above 0.5; values below
  // 0.5 only discriminate for gft-mode signal products.
  double binarization_cutoff = 0.52;
  double gamma = 1.0;
  double eps = 1e-6;
  int k = 32;
  SpectralMode spectral_mode = SpectralMode::eigenvalues;
  std::uint64_t master_seed = 0;
  bool target_jitter = true;  // Gaussian jitter with sd = KDE bandwidth
  int retry_budget = 10;      // spectrum redraws after empty reconstructions
  double cov_ridge = 0.0;     // 0 selects the automatic rule

  void validate() const;  // throws Error on out-of-range fields
};

struct SyntheticSample {
  Graph graph;
  double target;
  SpectralEmbedding spectrum;
  int seed_graph_index;
};

struct AugmentStats {
  int requested = 0;
  int kept = 0;
  int skipped = 0;  // samples dropped after exhausting the retry budget
};

/// Draw `count` target values from the training targets with probability
/// proportional to weight_fn, with replacement, then jitter each draw with
/// Gaussian noise of the given sd (0 disables). Throws AllZeroWeightsError
/// when no training target has positive weight.
std::vector<double> sample_targets(
    const std::function<double(double)>& weight_fn,
    const std::vector<double>& train_targets, int count, double jitter_sd,
    std::uint64_t seed);

/// Index of the training target nearest to y_new; ties go to the smaller
/// index.
int select_seed_graph(const std::vector<double>& targets, double y_new);

/// Invert a sampled spectrum against a seed graph's eigenbasis.
///
/// gft mode: x = U [s, 0]; score_ij = x_i * x_j. eigenvalues mode: rebuild
/// L~ = U diag(lambda~) U^T with the seed's trailing eigenvalues as padding
/// and score = I - L~. An edge exists where sigmoid(score) > cutoff (i != j);
/// scores within the eigensolver's reconstruction tolerance of zero count
/// as exactly zero so that rebuilding a seed from its own spectrum at
/// cutoff 0.5 returns the seed's adjacency. Isolated nodes are removed;
/// labels re-index. Throws EmptyGraphError when no edge survives.
Graph reconstruct_graph(const SpectralDecomposition& basis,
                        const SpectralEmbedding& spectrum, double cutoff,
                        const std::vector<std::string>& labels,
                        int seed_graph_index = -1);

/// End-to-end generation: sample round(fraction * N) targets, pick seed
/// graphs, draw spectra from the manifold, reconstruct, and keep the valid
/// samples in sample-index order. Deterministic in config.master_seed.
std::vector<SyntheticSample> augment(
    const Dataset& dataset, const ManifoldModel& model,
    const RelevanceFunction& relevance, const DensityEstimate& density,
    const AugmentationConfig& config,
    const std::vector<SpectralDecomposition>& decompositions,
    AugmentStats* stats = nullptr);

/// One JSON object per line: {"target", "seed_index", "nodes": [labels],
/// "edges": [[i, j], ...]}.
void write_synthetic_jsonl(const std::string& path,
                           const std::vector<SyntheticSample>& samples);

struct SyntheticRecord {
  Graph graph;
  double target;
  int seed_index;
};

std::vector<SyntheticRecord> load_synthetic_jsonl(const std::string& path);

}  // namespace smh

#endif  // SMH_RECONSTRUCT_HPP_
