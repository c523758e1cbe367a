//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_TESTS_SUPPORT_HPP_
#define SMH_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "smh/graph.hpp"

namespace smh::testing {

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  return Graph(n, std::move(edges), std::vector<std::string>(n, "C"));
}

inline Graph two_node() { return make_graph(2, {{0, 1}}); }

inline Graph triangle() { return make_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph path_graph(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return make_graph(k, std::move(edges));
}

inline Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return make_graph(leaves + 1, std::move(edges));
}

/// Independent eigenvalue oracle: Eigen's self-adjoint solver.
inline std::vector<double> eigen_oracle(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  std::vector<double> v(solver.eigenvalues().data(),
                        solver.eigenvalues().data() + m.rows());
  std::sort(v.begin(), v.end());
  return v;
}

/// All non-isomorphic connected graphs with 2..max_n nodes, by brute-force
/// enumeration of edge subsets with canonical-form deduplication.
inline std::vector<Graph> connected_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    }
    const int bits = static_cast<int>(slots.size());
    std::set<unsigned> seen;

    std::vector<int> perm(n);
    for (unsigned mask = 1; mask < (1u << bits); ++mask) {
      // connectivity
      std::vector<int> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (int b = 0; b < bits; ++b) {
        if (mask & (1u << b)) parent[find(slots[b].first)] = find(slots[b].second);
      }
      bool connected = true;
      for (int v = 0; v < n; ++v) {
        if (find(v) != find(0)) connected = false;
      }
      if (!connected) continue;

      // canonical form: minimum mask over node permutations
      std::iota(perm.begin(), perm.end(), 0);
      unsigned canon = ~0u;
      do {
        unsigned m = 0;
        for (int b = 0; b < bits; ++b) {
          if (!(mask & (1u << b))) continue;
          int a = perm[slots[b].first];
          int c = perm[slots[b].second];
          if (a > c) std::swap(a, c);
          for (int s = 0; s < bits; ++s) {
            if (slots[s].first == a && slots[s].second == c) {
              m |= (1u << s);
              break;
            }
          }
        }
        canon = std::min(canon, m);
      } while (std::next_permutation(perm.begin(), perm.end()));

      if (seen.insert(canon).second) {
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < bits; ++b) {
          if (mask & (1u << b)) edges.push_back(slots[b]);
        }
        out.push_back(make_graph(n, std::move(edges)));
      }
    }
  }
  return out;
}

}  // namespace smh::testing

#endif  // SMH_TESTS_SUPPORT_HPP_
