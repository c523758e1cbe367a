//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_SPECTRAL_MAP_HPP_
#define SMH_SPECTRAL_MAP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "smh/relevance.hpp"
#include "smh/spectral.hpp"
#include "smh/trees.hpp"

namespace smh {

enum class SpectralMode { eigenvalues, gft_coefficients };

std::string to_string(SpectralMode mode);
SpectralMode spectral_mode_from_string(const std::string& name);

/// Fixed-length spectral representation of a graph: either the k smallest
/// Laplacian eigenvalues (ascending) or the first k GFT coefficients in
/// ascending-eigenvalue order, zero-padded when the graph is smaller than k.
struct SpectralEmbedding {
  Eigen::VectorXd coefficients;  // length k
  int true_dimension = 0;        // entries that came from the graph
  SpectralMode mode = SpectralMode::eigenvalues;
};

SpectralEmbedding embed(const SpectralDecomposition& decomp, int k,
                        SpectralMode mode);

/// Target-to-spectrum map y -> s: k independent gradient-boosted tree
/// ensembles trained with relevance weights phi(y_i) renormalized to mean 1.
class SpectrumRegressor {
 public:
  struct TrainingSummary {
    // Weighted data term (1/N) sum_i phi_i * r_i^2 per dimension and stage.
    std::vector<std::vector<double>> per_dimension_loss;
    double final_data_term = 0.0;
    double regularization = 0.0;  // l2_leaf/2 * sum of squared leaf values
    double total() const { return final_data_term + regularization; }
  };

  static SpectrumRegressor fit(const std::vector<double>& targets,
                               const std::vector<SpectralEmbedding>& embeddings,
                               const RelevanceFunction& relevance,
                               const TreeHyper& hyper, std::uint64_t seed);

  /// mu(y); eigenvalues mode clamps to [0, 2] and sorts ascending.
  SpectralEmbedding predict(double y) const;

  /// Per-dimension ensemble outputs without post-processing.
  Eigen::VectorXd predict_raw(double y) const;

  int k() const { return static_cast<int>(ensembles_.size()); }
  SpectralMode mode() const { return mode_; }
  const TreeHyper& hyper() const { return hyper_; }
  std::uint64_t seed() const { return seed_; }
  const TrainingSummary& summary() const { return summary_; }

  /// Versioned JSON serialization, magic "SMHM1". Deterministic for a
  /// deterministic fit.
  std::string serialize() const;
  static SpectrumRegressor deserialize(const std::string& text);
  void save(const std::string& path) const;
  static SpectrumRegressor load(const std::string& path);

 private:
  std::vector<GradientBoostedTrees> ensembles_;
  SpectralMode mode_ = SpectralMode::eigenvalues;
  TreeHyper hyper_;
  std::uint64_t seed_ = 0;
  TrainingSummary summary_;
};

/// Table-style hyperparameter grid; the cross product is enumerated by
/// select_spectrum_hyper / select_downstream_hyper.
struct HyperGrid {
  std::vector<int> n_estimators{10, 50, 100, 250};
  std::vector<double> learning_rate{0.001, 0.01, 0.1};
  std::vector<int> max_depth{3, 5, 10};
  double l2_leaf = 1.0;

  std::vector<TreeHyper> enumerate() const;
  bool single() const;
};

/// Grid enumeration scored by SERA on a held-out validation slice (the
/// trailing fraction of the data in index order). The squared error for a
/// sample is the squared norm across spectrum dimensions; thresholds come
/// from phi(y_i).
TreeHyper select_spectrum_hyper(const std::vector<double>& targets,
                                const std::vector<SpectralEmbedding>& embeddings,
                                const RelevanceFunction& relevance,
                                const HyperGrid& grid, std::uint64_t seed,
                                double validation_fraction = 0.2);

}  // namespace smh

#endif  // SMH_SPECTRAL_MAP_HPP_
