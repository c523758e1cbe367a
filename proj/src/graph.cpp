//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "smh/graph.hpp"

#include <algorithm>
#include <cmath>

#include "smh/error.hpp"

namespace smh {

Graph::Graph(int node_count, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> node_labels, Provenance provenance,
             int seed_graph_id)
    : node_count_(node_count),
      edges_(std::move(edges)),
      node_labels_(std::move(node_labels)),
      provenance_(provenance),
      seed_graph_id_(seed_graph_id) {
  if (node_count_ <= 0) {
    throw Error("graph must have at least one node");
  }
  if (static_cast<int>(node_labels_.size()) != node_count_) {
    throw Error("node_labels size does not match node_count");
  }
  for (auto& [a, b] : edges_) {
    if (a == b) {
      throw Error("self-loop rejected: node " + std::to_string(a));
    }
    if (a < 0 || b < 0 || a >= node_count_ || b >= node_count_) {
      throw Error("edge endpoint out of range");
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(node_count_, 0);
  for (const auto& [a, b] : edges_) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

int Graph::min_degree() const {
  const auto deg = degrees();
  return *std::min_element(deg.begin(), deg.end());
}

double Graph::density() const {
  if (node_count_ < 2) return 0.0;
  const double n = node_count_;
  return 2.0 * static_cast<double>(edges_.size()) / (n * (n - 1.0));
}

Eigen::MatrixXd build_adjacency(const Graph& g) {
  const int n = g.node_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [i, j] : g.edges()) {
    a(i, j) = 1.0;
    a(j, i) = 1.0;
  }
  return a;
}

Eigen::MatrixXd normalized_laplacian(const Graph& g) {
  const int n = g.node_count();
  const auto deg = g.degrees();
  for (int i = 0; i < n; ++i) {
    if (deg[i] == 0) {
      throw IsolatedNodeError("node " + std::to_string(i) +
                              " has degree zero");
    }
  }
  std::vector<double> inv_sqrt(n);
  for (int i = 0; i < n; ++i) {
    inv_sqrt[i] = 1.0 / std::sqrt(static_cast<double>(deg[i]));
  }
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) l(i, i) = 1.0;
  for (const auto& [i, j] : g.edges()) {
    const double v = -inv_sqrt[i] * inv_sqrt[j];
    l(i, j) = v;
    l(j, i) = v;  // mirror keeps the matrix bitwise symmetric
  }
  return l;
}

Eigen::VectorXd default_signal(const Graph& g) {
  const auto deg = g.degrees();
  Eigen::VectorXd x(g.node_count());
  double sq = 0.0;
  for (int i = 0; i < g.node_count(); ++i) {
    x(i) = static_cast<double>(deg[i]);
    sq += x(i) * x(i);
  }
  if (sq == 0.0) {
    throw IsolatedNodeError("graph has no edges; degree signal is zero");
  }
  return x / std::sqrt(sq);
}

}  // namespace smh
