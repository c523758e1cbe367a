//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_MANIFOLD_HPP_
#define SMH_MANIFOLD_HPP_

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "smh/spectral_map.hpp"

namespace smh {

/// Conditional Gaussian over spectral coefficients: p(s|y) = N(mu(y),
/// Sigma(y)) with mu from the regressor and Sigma from kernel-weighted
/// outer products around mu.
struct ManifoldModel {
  SpectrumRegressor regressor;
  std::vector<double> training_targets;
  Eigen::MatrixXd training_embeddings;  // row i = s_i, N x k
  double gamma = 1.0;                   // kernel width, K = exp(-gamma (y-y_i)^2)
  double cov_ridge = 0.0;               // 0 selects the automatic trace rule
};

ManifoldModel make_manifold(SpectrumRegressor regressor,
                            const std::vector<double>& targets,
                            const std::vector<SpectralEmbedding>& embeddings,
                            double gamma, double cov_ridge = 0.0);

/// Normalized kernel weights w_i(y) = K(y, y_i) / sum_j K(y, y_j). The
/// exponents are shifted by their maximum before exponentiation, which is
/// exactly the scale freedom of the normalization and keeps the nearest
/// target at weight ~1 when everything else underflows.
Eigen::VectorXd kernel_weights(const ManifoldModel& m, double y);

/// Ridge actually applied at target y (config value, or the automatic
/// 1e-6 * trace/k rule floored at 1e-9).
double resolve_ridge(const ManifoldModel& m, double y);

/// Sigma(y) = sum_i w_i(y) (s_i - mu(y))(s_i - mu(y))^T + ridge I.
Eigen::MatrixXd conditional_covariance(const ManifoldModel& m, double y);

/// N(mu(y), Sigma(y)) with the Cholesky factor precomputed, for bulk
/// sampling at a fixed y.
struct ConditionalGaussian {
  Eigen::VectorXd mu;
  Eigen::MatrixXd chol;  // lower triangular L, Sigma = L L^T
  SpectralMode mode = SpectralMode::eigenvalues;

  SpectralEmbedding sample(std::uint64_t seed) const;
};

/// Factorize Sigma(y); on numerical failure the ridge escalates x10 up to
/// four times before CholeskyFailure.
ConditionalGaussian prepare_conditional(const ManifoldModel& m, double y);

/// Draw s ~ N(mu(y), Sigma(y)) as mu + L z with z from the seeded
/// generator; eigenvalues mode clamps to [0, 2] and sorts ascending.
SpectralEmbedding sample_spectrum(const ManifoldModel& m, double y,
                                  std::uint64_t rng_seed);

}  // namespace smh

#endif  // SMH_MANIFOLD_HPP_
