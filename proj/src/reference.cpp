//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "smh/reference.hpp"

#include <algorithm>
#include <cmath>

#include "smh/error.hpp"

namespace smh::reference {

double kde_eval(const std::vector<double>& targets, double bandwidth,
                double y) {
  const double norm = 1.0 / std::sqrt(2.0 * 3.14159265358979323846);
  double sum = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double u = (y - targets[i]) / bandwidth;
    sum += norm * std::exp(-0.5 * u * u);
  }
  return sum / (static_cast<double>(targets.size()) * bandwidth);
}

double kde_eval_reversed(const std::vector<double>& targets, double bandwidth,
                         double y) {
  const double norm = 1.0 / std::sqrt(2.0 * 3.14159265358979323846);
  double sum = 0.0;
  for (std::size_t i = targets.size(); i-- > 0;) {
    const double u = (y - targets[i]) / bandwidth;
    sum += norm * std::exp(-0.5 * u * u);
  }
  return sum / (static_cast<double>(targets.size()) * bandwidth);
}

std::vector<double> kernel_weights(const std::vector<double>& targets,
                                   double gamma, double y) {
  std::vector<double> k(targets.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double d = y - targets[i];
    k[i] = std::exp(-gamma * d * d);
    sum += k[i];
  }
  for (double& v : k) v /= sum;
  return k;
}

Eigen::MatrixXd conditional_covariance(const Eigen::MatrixXd& embeddings,
                                       const std::vector<double>& weights,
                                       const Eigen::VectorXd& mu,
                                       double ridge) {
  const int n = static_cast<int>(embeddings.rows());
  const int k = static_cast<int>(embeddings.cols());
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        sigma(a, b) +=
            weights[i] * (embeddings(i, a) - mu(a)) * (embeddings(i, b) - mu(b));
      }
    }
  }
  for (int a = 0; a < k; ++a) sigma(a, a) += ridge;
  return sigma;
}

double sampling_weight(double phi, double density, double eps) {
  return phi * (1.0 / (density + eps));
}

void eigh_classical_jacobi(const Eigen::MatrixXd& matrix,
                           std::vector<double>& eigenvalues, double tol,
                           int max_rotations) {
  const int n = static_cast<int>(matrix.rows());
  Eigen::MatrixXd a = matrix;
  for (int rot = 0; rot < max_rotations; ++rot) {
    int p = 0, q = 1;
    double biggest = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (std::abs(a(i, j)) > biggest) {
          biggest = std::abs(a(i, j));
          p = i;
          q = j;
        }
      }
    }
    if (n < 2 || biggest < tol) break;

    const double tau = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
    const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    for (int i = 0; i < n; ++i) {
      const double aip = a(i, p), aiq = a(i, q);
      a(i, p) = c * aip - s * aiq;
      a(i, q) = s * aip + c * aiq;
    }
    for (int i = 0; i < n; ++i) {
      const double api = a(p, i), aqi = a(q, i);
      a(p, i) = c * api - s * aqi;
      a(q, i) = s * api + c * aqi;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
  }
  eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) eigenvalues[i] = a(i, i);
  std::sort(eigenvalues.begin(), eigenvalues.end());
}

}  // namespace smh::reference
