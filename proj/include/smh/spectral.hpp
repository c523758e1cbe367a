//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_SPECTRAL_HPP_
#define SMH_SPECTRAL_HPP_

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "smh/graph.hpp"

namespace smh {

/// Eigendecomposition of a graph's normalized Laplacian together with the
/// node signal and its coefficients in the eigenbasis.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;      // ascending, in [0, 2]
  Eigen::MatrixXd eigenvectors;     // orthonormal columns
  Eigen::VectorXd signal;           // graph signal x
  Eigen::VectorXd gft_coefficients; // U^T x
};

struct JacobiOptions {
  double tolerance = 1e-10;  // off-diagonal Frobenius norm
  int max_sweeps = 100;
};

/// Dense symmetric eigendecomposition by cyclic Jacobi rotations.
/// Eigenvalues come back ascending; eigenvector columns are orthonormal and
/// sign-fixed (largest-magnitude entry positive, ties to the lowest index).
/// Throws ConvergenceFailure if the sweep budget runs out.
void jacobi_eigh(const Eigen::MatrixXd& matrix, Eigen::VectorXd& values,
                 Eigen::MatrixXd& vectors, const JacobiOptions& opts = {});

/// Force the largest-magnitude entry of every column positive (ties broken
/// by lowest row index). Makes decompositions reproducible.
void fix_eigenvector_signs(Eigen::MatrixXd& vectors);

using SignalExtractor = std::function<Eigen::VectorXd(const Graph&)>;

/// Decompose using the default degree signal.
SpectralDecomposition spectral_decompose(const Graph& g);

/// Decompose with an explicit signal of length node_count.
SpectralDecomposition spectral_decompose(const Graph& g,
                                         const Eigen::VectorXd& signal);

/// Batch decomposition, one independent problem per graph (OpenMP).
std::vector<SpectralDecomposition> spectral_decompose_all(
    const std::vector<Graph>& graphs, const SignalExtractor& extract = {});

/// Forward transform: x_hat = U^T x.
Eigen::VectorXd gft(const Eigen::MatrixXd& basis, const Eigen::VectorXd& x);

/// Inverse transform: x = U x_hat. Shorter coefficient vectors are
/// zero-padded; longer ones raise DimensionMismatch.
Eigen::VectorXd inverse_gft(const Eigen::MatrixXd& basis,
                            const Eigen::VectorXd& coefficients);

}  // namespace smh

#endif  // SMH_SPECTRAL_HPP_
