//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "smh/manifold.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>

#include "smh/error.hpp"
#include "smh/parallel.hpp"
#include "smh/rng.hpp"

namespace smh {

ManifoldModel make_manifold(SpectrumRegressor regressor,
                            const std::vector<double>& targets,
                            const std::vector<SpectralEmbedding>& embeddings,
                            double gamma, double cov_ridge) {
  if (targets.empty() || targets.size() != embeddings.size()) {
    throw LengthMismatch("manifold: targets/embeddings disagree");
  }
  if (gamma <= 0.0) throw Error("manifold: gamma must be positive");
  if (cov_ridge < 0.0) throw Error("manifold: cov_ridge must be >= 0");

  ManifoldModel m;
  const int n = static_cast<int>(targets.size());
  const int k = regressor.k();
  m.training_embeddings.resize(n, k);
  for (int i = 0; i < n; ++i) {
    if (embeddings[i].coefficients.size() != k) {
      throw LengthMismatch("manifold: embedding size != regressor k");
    }
    m.training_embeddings.row(i) = embeddings[i].coefficients.transpose();
  }
  m.regressor = std::move(regressor);
  m.training_targets = targets;
  m.gamma = gamma;
  m.cov_ridge = cov_ridge;
  return m;
}

Eigen::VectorXd kernel_weights(const ManifoldModel& m, double y) {
  const int n = static_cast<int>(m.training_targets.size());
  Eigen::VectorXd logk(n);
  for (int i = 0; i < n; ++i) {
    const double d = y - m.training_targets[i];
    logk(i) = -m.gamma * d * d;
  }
  const double shift = logk.maxCoeff();
  Eigen::VectorXd w(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    w(i) = std::exp(logk(i) - shift);
    sum += w(i);
  }
  if (sum <= 0.0 || !std::isfinite(sum)) {
    // unreachable with the shift, kept as the documented nearest-target limit
    int nearest = 0;
    for (int i = 1; i < n; ++i) {
      if (std::abs(y - m.training_targets[i]) <
          std::abs(y - m.training_targets[nearest])) {
        nearest = i;
      }
    }
    w.setZero();
    w(nearest) = 1.0;
    return w;
  }
  return w / sum;
}

namespace {

Eigen::MatrixXd unridged_covariance(const ManifoldModel& m,
                                    const Eigen::VectorXd& w,
                                    const Eigen::VectorXd& mu) {
  const int n = static_cast<int>(m.training_targets.size());
  const int k = static_cast<int>(mu.size());
  Eigen::MatrixXd centered = m.training_embeddings;
  centered.rowwise() -= mu.transpose();

  Eigen::MatrixXd sigma(k, k);
  // parallel over output entries; each entry sums over N in fixed order,
  // so the result does not depend on the thread count
#pragma omp parallel for schedule(static) num_threads(max_threads())
  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) {
        s += w(i) * centered(i, a) * centered(i, b);
      }
      sigma(a, b) = s;
      sigma(b, a) = s;
    }
  }
  return sigma;
}

double auto_ridge(const Eigen::MatrixXd& sigma) {
  const double k = static_cast<double>(sigma.rows());
  return std::max(1e-6 * sigma.trace() / k, 1e-9);
}

}  // namespace

double resolve_ridge(const ManifoldModel& m, double y) {
  if (m.cov_ridge > 0.0) return m.cov_ridge;
  const auto w = kernel_weights(m, y);
  const Eigen::VectorXd mu = m.regressor.predict(y).coefficients;
  return auto_ridge(unridged_covariance(m, w, mu));
}

Eigen::MatrixXd conditional_covariance(const ManifoldModel& m, double y) {
  const auto w = kernel_weights(m, y);
  const Eigen::VectorXd mu = m.regressor.predict(y).coefficients;
  Eigen::MatrixXd sigma = unridged_covariance(m, w, mu);
  const double ridge = m.cov_ridge > 0.0 ? m.cov_ridge : auto_ridge(sigma);
  sigma.diagonal().array() += ridge;
  return sigma;
}

ConditionalGaussian prepare_conditional(const ManifoldModel& m, double y) {
  const auto w = kernel_weights(m, y);
  const Eigen::VectorXd mu = m.regressor.predict(y).coefficients;
  Eigen::MatrixXd base = unridged_covariance(m, w, mu);
  double ridge = m.cov_ridge > 0.0 ? m.cov_ridge : auto_ridge(base);

  for (int attempt = 0; attempt <= 4; ++attempt) {
    Eigen::MatrixXd sigma = base;
    sigma.diagonal().array() += ridge;
    Eigen::LLT<Eigen::MatrixXd> llt(sigma);
    // LLT does not flag NaN inputs, so check the factor explicitly
    if (llt.info() == Eigen::Success &&
        Eigen::MatrixXd(llt.matrixL()).allFinite()) {
      ConditionalGaussian g;
      g.mu = mu;
      g.chol = llt.matrixL();
      g.mode = m.regressor.mode();
      return g;
    }
    ridge *= 10.0;
  }
  throw CholeskyFailure("covariance not factorizable after ridge escalation");
}

SpectralEmbedding ConditionalGaussian::sample(std::uint64_t seed) const {
  Rng rng(seed);
  const int k = static_cast<int>(mu.size());
  Eigen::VectorXd z(k);
  for (int i = 0; i < k; ++i) z(i) = rng.normal();
  Eigen::VectorXd s = mu + chol * z;

  SpectralEmbedding e;
  e.mode = mode;
  e.true_dimension = k;
  if (mode == SpectralMode::eigenvalues) {
    for (int i = 0; i < k; ++i) s(i) = std::clamp(s(i), 0.0, 2.0);
    std::sort(s.data(), s.data() + k);
  }
  e.coefficients = std::move(s);
  return e;
}

SpectralEmbedding sample_spectrum(const ManifoldModel& m, double y,
                                  std::uint64_t rng_seed) {
  return prepare_conditional(m, y).sample(rng_seed);
}

}  // namespace smh
