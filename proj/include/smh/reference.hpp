//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_REFERENCE_HPP_
#define SMH_REFERENCE_HPP_

#include <vector>

#include <Eigen/Dense>

namespace smh::reference {

// Serial, naive-loop implementations of the numerical kernels. They are the
// comparison baseline for the parallel library paths, both in the tests and
// in the benchmark tool. Keep them dumb: no shifting tricks, no blocking,
// no OpenMP.

/// (1/Nh) sum_i K((y - y_i)/h), Gaussian kernel, plain forward loop.
double kde_eval(const std::vector<double>& targets, double bandwidth, double y);

/// Same sum accumulated in reverse order (for round-off independence checks).
double kde_eval_reversed(const std::vector<double>& targets, double bandwidth,
                         double y);

/// w_i = exp(-gamma (y - y_i)^2) / sum_j exp(-gamma (y - y_j)^2), direct.
std::vector<double> kernel_weights(const std::vector<double>& targets,
                                   double gamma, double y);

/// sum_i w_i (s_i - mu)(s_i - mu)^T + ridge I via an explicit triple loop.
Eigen::MatrixXd conditional_covariance(const Eigen::MatrixXd& embeddings,
                                       const std::vector<double>& weights,
                                       const Eigen::VectorXd& mu, double ridge);

/// phi / (p + eps).
double sampling_weight(double phi, double density, double eps);

/// Classical Jacobi eigensolver: rotate the largest off-diagonal element
/// until all are below tol. Independent of the cyclic sweep implementation.
void eigh_classical_jacobi(const Eigen::MatrixXd& matrix,
                           std::vector<double>& eigenvalues, double tol = 1e-12,
                           int max_rotations = 1000000);

}  // namespace smh::reference

#endif  // SMH_REFERENCE_HPP_
