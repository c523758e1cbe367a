//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "smh/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "smh/error.hpp"
#include "smh/parallel.hpp"

namespace smh {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  double sq = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      sq += 2.0 * a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sq);
}

}  // namespace

void fix_eigenvector_signs(Eigen::MatrixXd& vectors) {
  const int n = static_cast<int>(vectors.rows());
  for (int c = 0; c < static_cast<int>(vectors.cols()); ++c) {
    int arg = 0;
    double best = std::abs(vectors(0, c));
    for (int r = 1; r < n; ++r) {
      const double v = std::abs(vectors(r, c));
      if (v > best) {  // strict: ties keep the lowest index
        best = v;
        arg = r;
      }
    }
    if (vectors(arg, c) < 0.0) vectors.col(c) = -vectors.col(c);
  }
}

void jacobi_eigh(const Eigen::MatrixXd& matrix, Eigen::VectorXd& values,
                 Eigen::MatrixXd& vectors, const JacobiOptions& opts) {
  const int n = static_cast<int>(matrix.rows());
  if (matrix.cols() != n) throw DimensionMismatch("jacobi_eigh: square matrix required");

  Eigen::MatrixXd a = matrix;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

  if (n > 1) {
    bool converged = off_diagonal_norm(a) < opts.tolerance;
    int sweep = 0;
    while (!converged) {
      if (sweep++ >= opts.max_sweeps) {
        throw ConvergenceFailure("jacobi_eigh: no convergence after " +
                                 std::to_string(opts.max_sweeps) + " sweeps");
      }
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const double apq = a(p, q);
          if (apq == 0.0) continue;
          const double app = a(p, p);
          const double aqq = a(q, q);
          const double tau = (aqq - app) / (2.0 * apq);
          const double t = (tau >= 0.0)
                               ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                               : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;

          for (int i = 0; i < n; ++i) {
            const double aip = a(i, p);
            const double aiq = a(i, q);
            a(i, p) = c * aip - s * aiq;
            a(i, q) = s * aip + c * aiq;
          }
          for (int i = 0; i < n; ++i) {
            const double api = a(p, i);
            const double aqi = a(q, i);
            a(p, i) = c * api - s * aqi;
            a(q, i) = s * api + c * aqi;
          }
          a(p, q) = 0.0;
          a(q, p) = 0.0;

          for (int i = 0; i < n; ++i) {
            const double vip = v(i, p);
            const double viq = v(i, q);
            v(i, p) = c * vip - s * viq;
            v(i, q) = s * vip + c * viq;
          }
        }
      }
      converged = off_diagonal_norm(a) < opts.tolerance;
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int x, int y) { return a(x, x) < a(y, y); });

  values.resize(n);
  vectors.resize(n, n);
  for (int c = 0; c < n; ++c) {
    values(c) = a(order[c], order[c]);
    vectors.col(c) = v.col(order[c]);
  }
  fix_eigenvector_signs(vectors);
}

SpectralDecomposition spectral_decompose(const Graph& g) {
  return spectral_decompose(g, default_signal(g));
}

SpectralDecomposition spectral_decompose(const Graph& g,
                                         const Eigen::VectorXd& signal) {
  if (signal.size() != g.node_count()) {
    throw DimensionMismatch("signal length does not match node count");
  }
  const Eigen::MatrixXd l = normalized_laplacian(g);
  SpectralDecomposition d;
  jacobi_eigh(l, d.eigenvalues, d.eigenvectors);
  d.signal = signal;
  d.gft_coefficients = d.eigenvectors.transpose() * signal;
  return d;
}

std::vector<SpectralDecomposition> spectral_decompose_all(
    const std::vector<Graph>& graphs, const SignalExtractor& extract) {
  const int n = static_cast<int>(graphs.size());
  std::vector<SpectralDecomposition> out(n);
  parallel_for_index(n, [&](int i) {
    out[i] = extract ? spectral_decompose(graphs[i], extract(graphs[i]))
                     : spectral_decompose(graphs[i]);
  });
  return out;
}

Eigen::VectorXd gft(const Eigen::MatrixXd& basis, const Eigen::VectorXd& x) {
  if (x.size() != basis.rows()) {
    throw DimensionMismatch("gft: signal length does not match basis");
  }
  return basis.transpose() * x;
}

Eigen::VectorXd inverse_gft(const Eigen::MatrixXd& basis,
                            const Eigen::VectorXd& coefficients) {
  const auto n = basis.rows();
  if (coefficients.size() > n) {
    throw DimensionMismatch("inverse_gft: more coefficients than basis vectors");
  }
  Eigen::VectorXd padded = Eigen::VectorXd::Zero(n);
  padded.head(coefficients.size()) = coefficients;
  return basis * padded;
}

}  // namespace smh
