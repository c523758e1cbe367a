//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <set>
#include <vector>

#include "smh/datagen.hpp"
#include "smh/error.hpp"
#include "smh/reconstruct.hpp"
#include "smh/rng.hpp"
#include "support.hpp"

using namespace smh;
using namespace smh::testing;

TEST_SUITE_BEGIN("reconstruct");

TEST_CASE("target sampling: degenerate, uniform, zero-weight cases") {
  const std::vector<double> targets{0.0, 1.0, 2.0, 3.0};

  // all mass on one target, no jitter
  const auto all_one = sample_targets(
      [](double y) { return y == 2.0 ? 1.0 : 0.0; }, targets, 50, 0.0, 3);
  for (const double y : all_one) CHECK(y == 2.0);

  // uniform weights: frequencies near 1/4 (binomial concentration)
  const auto uniform =
      sample_targets([](double) { return 1.0; }, targets, 100000, 0.0, 5);
  std::vector<int> counts(4, 0);
  for (const double y : uniform) ++counts[static_cast<int>(y)];
  for (const int c : counts) {
    CHECK(std::abs(c / 100000.0 - 0.25) < 0.02);
  }

  // zero-weight target is never drawn
  const auto skewed = sample_targets(
      [](double y) { return y == 0.0 ? 0.0 : 1.0; }, targets, 2000, 0.0, 7);
  for (const double y : skewed) CHECK(y != 0.0);

  CHECK_THROWS_AS(
      sample_targets([](double) { return 0.0; }, targets, 10, 0.0, 1),
      AllZeroWeightsError);
}

TEST_CASE("target sampling is deterministic and jitter spreads draws") {
  const std::vector<double> targets{0.0, 5.0};
  const auto a = sample_targets([](double) { return 1.0; }, targets, 64, 0.5, 11);
  const auto b = sample_targets([](double) { return 1.0; }, targets, 64, 0.5, 11);
  CHECK(a == b);
  std::set<double> unique(a.begin(), a.end());
  CHECK(unique.size() > 30);  // jitter makes draws distinct
}

TEST_CASE("seed selection: exact match, tie to lower index, extremes") {
  const std::vector<double> targets{1.0, 3.0, 5.0, 3.0};
  CHECK(select_seed_graph(targets, 3.0) == 1);
  CHECK(select_seed_graph(targets, 2.0) == 0);  // tie 1.0 vs 3.0
  CHECK(select_seed_graph(targets, 4.0) == 1);  // tie 3.0 vs 5.0
  CHECK(select_seed_graph(targets, -100.0) == 0);
  CHECK(select_seed_graph(targets, 100.0) == 2);
}

TEST_CASE("zero signal: cutoff below 0.5 gives the complete graph") {
  const auto basis = spectral_decompose(path_graph(4));
  SpectralEmbedding zero;
  zero.mode = SpectralMode::gft_coefficients;
  zero.coefficients = Eigen::VectorXd::Zero(4);
  zero.true_dimension = 4;

  const auto g = reconstruct_graph(basis, zero, 0.3,
                                   {"C", "C", "C", "C"});
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 6);  // sigmoid(0) = 0.5 > 0.3 everywhere
  CHECK(g.provenance() == Provenance::synthetic);
}

TEST_CASE("zero signal: cutoff above 0.5 leaves no edges") {
  const auto basis = spectral_decompose(path_graph(4));
  SpectralEmbedding zero;
  zero.mode = SpectralMode::gft_coefficients;
  zero.coefficients = Eigen::VectorXd::Zero(4);
  zero.true_dimension = 4;
  CHECK_THROWS_AS(
      reconstruct_graph(basis, zero, 0.6, {"C", "C", "C", "C"}),
      EmptyGraphError);
}

TEST_CASE("identity reconstruction recovers the seed adjacency at 0.5") {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + rng.uniform_int(20);
    const auto g = random_connected_graph(rng, n, 0.25);
    const auto d = spectral_decompose(g);

    SpectralEmbedding own;
    own.mode = SpectralMode::eigenvalues;
    own.coefficients = d.eigenvalues;
    own.true_dimension = n;

    const auto rebuilt =
        reconstruct_graph(d, own, 0.5, g.node_labels());
    CHECK(rebuilt.node_count() == g.node_count());
    CHECK(rebuilt.edges() == g.edges());
  }
}

TEST_CASE("identity reconstruction with truncated spectrum padded by the seed") {
  Rng rng(29);
  const auto g = random_connected_graph(rng, 12, 0.3);
  const auto d = spectral_decompose(g);
  // only the first k eigenvalues, the seed pads the rest
  SpectralEmbedding part;
  part.mode = SpectralMode::eigenvalues;
  part.coefficients = d.eigenvalues.head(5);
  part.true_dimension = 5;
  const auto rebuilt = reconstruct_graph(d, part, 0.5, g.node_labels());
  CHECK(rebuilt.edges() == g.edges());
}

TEST_CASE("isolated nodes are removed and labels re-indexed") {
  // a gft signal concentrated on two nodes leaves the others isolated
  const auto basis = spectral_decompose(path_graph(5));
  // craft x via coefficients = U^T x for x = big on nodes 0 and 1 only
  Eigen::VectorXd x = Eigen::VectorXd::Constant(5, -4.0);
  x(0) = 4.0;
  x(1) = 4.0;
  SpectralEmbedding e;
  e.mode = SpectralMode::gft_coefficients;
  e.coefficients = basis.eigenvectors.transpose() * x;
  e.true_dimension = 5;

  const auto g = reconstruct_graph(basis, e, 0.9,
                                   {"N", "O", "C", "C", "C"});
  // scores: x_i x_j = 16 for pairs within {0,1} and within {2,3,4};
  // cross pairs are -16; sigmoid(16) > 0.9 keeps both cliques
  CHECK(g.node_count() == 5);
  CHECK(g.edge_count() == 4);

  Eigen::VectorXd y = Eigen::VectorXd::Constant(5, -4.0);
  y(0) = 4.0;
  SpectralEmbedding e2;
  e2.mode = SpectralMode::gft_coefficients;
  e2.coefficients = basis.eigenvectors.transpose() * y;
  e2.true_dimension = 5;
  const auto g2 = reconstruct_graph(basis, e2, 0.9,
                                    {"N", "O", "C", "C", "C"});
  // node 0 is positive alone: its pairs all score -16 and it drops out
  CHECK(g2.node_count() == 4);
  CHECK(g2.node_labels()[0] == "O");
}

namespace {

struct Pipeline {
  Dataset dataset;
  std::vector<SpectralDecomposition> decomps;
  RelevanceFunction relevance;
  DensityEstimate density;
  ManifoldModel manifold;
  AugmentationConfig config;
};

Pipeline build_pipeline(int count, std::uint64_t seed) {
  GraphCorpusOptions options;
  options.count = count;
  options.seed = seed;
  Dataset dataset = random_graph_dataset(options);
  auto decomps = spectral_decompose_all(dataset.graphs());
  const auto targets = dataset.targets();
  auto relevance = RelevanceFunction::extremes(targets);
  auto density = DensityEstimate::fit(targets);

  AugmentationConfig config;
  config.k = std::min(8, dataset.min_node_count());
  config.sampling_fraction = 0.2;
  config.master_seed = seed;

  std::vector<SpectralEmbedding> embeddings;
  for (const auto& d : decomps) {
    embeddings.push_back(embed(d, config.k, config.spectral_mode));
  }
  auto regressor = SpectrumRegressor::fit(targets, embeddings, relevance,
                                          TreeHyper{50, 0.1, 3, 1.0}, seed);
  auto manifold = make_manifold(std::move(regressor), targets, embeddings,
                                config.gamma, config.cov_ridge);
  return Pipeline{std::move(dataset), std::move(decomps), std::move(relevance),
                  std::move(density), std::move(manifold), config};
}

}  // namespace

TEST_CASE("augment: count, determinism, validity, and distribution shift") {
  auto p = build_pipeline(150, 3);
  AugmentStats stats;
  const auto samples = augment(p.dataset, p.manifold, p.relevance, p.density,
                               p.config, p.decomps, &stats);
  CHECK(stats.requested == 30);  // round(0.2 * 150)
  CHECK(stats.kept + stats.skipped == stats.requested);
  CHECK(static_cast<int>(samples.size()) == stats.kept);
  CHECK(stats.kept > 0);

  for (const auto& s : samples) {
    CHECK(s.graph.edge_count() >= 1);
    CHECK(s.graph.min_degree() >= 1);
    CHECK(s.graph.provenance() == Provenance::synthetic);
    CHECK(s.seed_graph_index >= 0);
    CHECK(s.seed_graph_index < p.dataset.size());
  }

  const auto again = augment(p.dataset, p.manifold, p.relevance, p.density,
                             p.config, p.decomps);
  REQUIRE(again.size() == samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    CHECK(again[i].target == samples[i].target);
    CHECK(again[i].graph.edges() == samples[i].graph.edges());
  }

  // synthetic targets concentrate in the high-relevance region
  int synth_hi = 0, train_hi = 0;
  for (const auto& s : samples) {
    if (p.relevance(s.target) >= 0.5) ++synth_hi;
  }
  for (const auto& r : p.dataset.records) {
    if (p.relevance(r.target) >= 0.5) ++train_hi;
  }
  const double synth_frac = double(synth_hi) / double(samples.size());
  const double train_frac = double(train_hi) / double(p.dataset.size());
  CHECK(synth_frac > train_frac);
}

TEST_CASE("augment respects a custom zero-above-mean relevance") {
  auto p = build_pipeline(120, 9);
  const auto targets = p.dataset.targets();
  const double mean =
      std::accumulate(targets.begin(), targets.end(), 0.0) / targets.size();
  const double lo = *std::min_element(targets.begin(), targets.end());
  // relevance 1 at the minimum, 0 from the mean upward
  const auto custom = RelevanceFunction::from_control_points(
      {{lo, 1.0}, {mean, 0.0}, {mean + 1.0, 0.0}});
  AugmentationConfig config = p.config;
  config.target_jitter = false;  // keep draws on observed targets
  const auto samples = augment(p.dataset, p.manifold, custom, p.density,
                               config, p.decomps);
  for (const auto& s : samples) {
    CHECK(s.target < mean);
  }
}

TEST_CASE("jsonl round trip") {
  auto p = build_pipeline(60, 21);
  const auto samples = augment(p.dataset, p.manifold, p.relevance, p.density,
                               p.config, p.decomps);
  REQUIRE(!samples.empty());
  const auto path =
      (std::filesystem::temp_directory_path() / "smh_test_synth.jsonl").string();
  write_synthetic_jsonl(path, samples);
  const auto loaded = load_synthetic_jsonl(path);
  REQUIRE(loaded.size() == samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    CHECK(loaded[i].target == samples[i].target);
    CHECK(loaded[i].seed_index == samples[i].seed_graph_index);
    CHECK(loaded[i].graph.edges() == samples[i].graph.edges());
    CHECK(loaded[i].graph.node_labels() == samples[i].graph.node_labels());
  }
}

TEST_CASE("config validation rejects out-of-range fields") {
  AugmentationConfig c;
  c.sampling_fraction = 0.0;
  CHECK_THROWS_AS(c.validate(), Error);
  c = AugmentationConfig{};
  c.binarization_cutoff = 1.0;
  CHECK_THROWS_AS(c.validate(), Error);
  c = AugmentationConfig{};
  c.gamma = 0.0;
  CHECK_THROWS_AS(c.validate(), Error);
  c = AugmentationConfig{};
  CHECK_NOTHROW(c.validate());
}

TEST_SUITE_END();
