//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_GRAPH_HPP_
#define SMH_GRAPH_HPP_

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace smh {

enum class Provenance { original, synthetic };

/// Undirected labeled graph. Edges are stored once as (i, j) pairs with
/// i < j, sorted and deduplicated; self-loops are rejected at construction.
class Graph {
 public:
  Graph(int node_count, std::vector<std::pair<int, int>> edges,
        std::vector<std::string> node_labels,
        Provenance provenance = Provenance::original, int seed_graph_id = -1);

  int node_count() const { return node_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& node_labels() const { return node_labels_; }
  Provenance provenance() const { return provenance_; }
  int seed_graph_id() const { return seed_graph_id_; }

  std::vector<int> degrees() const;
  int min_degree() const;

  /// 2|E| / (n(n-1)); zero for n < 2.
  double density() const;

 private:
  int node_count_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> node_labels_;
  Provenance provenance_;
  int seed_graph_id_;
};

/// Dense 0/1 adjacency matrix; symmetric with zero diagonal.
Eigen::MatrixXd build_adjacency(const Graph& g);

/// L = I - D^{-1/2} A D^{-1/2}. Exactly symmetric (upper triangle mirrored).
/// Throws IsolatedNodeError if any node has degree zero.
Eigen::MatrixXd normalized_laplacian(const Graph& g);

/// Degree vector scaled to unit Euclidean norm; the default graph signal.
/// Throws IsolatedNodeError when the graph has no edges at all.
Eigen::VectorXd default_signal(const Graph& g);

}  // namespace smh

#endif  // SMH_GRAPH_HPP_
