//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "smh/trees.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <nlohmann/json.hpp>

#include "smh/error.hpp"

namespace smh {

namespace {

struct SplitCandidate {
  int feature = -1;
  double threshold = 0.0;
  double gain = 0.0;
};

struct Partition {
  std::vector<int> left, right;
};

// Weighted SSE of a group given its aggregate sums: sum(w r^2) - (sum
// (w r))^2 / sum(w).
double group_sse(double sw, double swr, double swr2) {
  if (sw <= 0.0) return 0.0;
  return swr2 - swr * swr / sw;
}

}  // namespace

RegressionTree RegressionTree::fit(const Eigen::MatrixXd& features,
                                   const std::vector<double>& residuals,
                                   const std::vector<double>& weights,
                                   int max_depth, double l2_leaf) {
  const int n = static_cast<int>(features.rows());
  const int n_features = static_cast<int>(features.cols());

  RegressionTree tree;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);

  struct Work {
    int node;
    std::vector<int> rows;
    int depth;
  };

  auto make_leaf = [&](const std::vector<int>& rows) {
    double sw = 0.0, swr = 0.0;
    for (const int i : rows) {
      sw += weights[i];
      swr += weights[i] * residuals[i];
    }
    return swr / (sw + l2_leaf);
  };

  tree.nodes_.push_back(TreeNode{});
  std::vector<Work> stack{{0, std::move(all), 0}};

  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    TreeNode& node = tree.nodes_[w.node];

    if (w.depth >= max_depth) {
      node.value = make_leaf(w.rows);
      continue;
    }

    double sw = 0.0, swr = 0.0, swr2 = 0.0;
    for (const int i : w.rows) {
      sw += weights[i];
      swr += weights[i] * residuals[i];
      swr2 += weights[i] * residuals[i] * residuals[i];
    }
    const double parent_sse = group_sse(sw, swr, swr2);

    SplitCandidate best;
    std::vector<int> order;
    for (int f = 0; f < n_features; ++f) {
      order = w.rows;
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return features(a, f) < features(b, f);
      });

      double lw = 0.0, lwr = 0.0, lwr2 = 0.0;
      double last_value = std::numeric_limits<double>::quiet_NaN();
      bool have_left = false;
      for (const int i : order) {
        const double v = features(i, f);
        if (weights[i] > 0.0) {
          // candidate boundary sits between distinct positive-weight values
          if (have_left && v > last_value && lw > 0.0 && sw - lw > 0.0) {
            const double gain =
                parent_sse - group_sse(lw, lwr, lwr2) -
                group_sse(sw - lw, swr - lwr, swr2 - lwr2);
            if (gain > best.gain + 1e-12) {
              best = {f, 0.5 * (last_value + v), gain};
            }
          }
          last_value = v;
          have_left = true;
        }
        lw += weights[i];
        lwr += weights[i] * residuals[i];
        lwr2 += weights[i] * residuals[i] * residuals[i];
      }
    }

    if (best.feature < 0 || best.gain <= 1e-12) {
      node.value = make_leaf(w.rows);
      continue;
    }

    Partition part;
    for (const int i : w.rows) {
      (features(i, best.feature) < best.threshold ? part.left : part.right)
          .push_back(i);
    }

    node.feature = best.feature;
    node.threshold = best.threshold;
    node.left = static_cast<int>(tree.nodes_.size());
    node.right = node.left + 1;
    tree.nodes_.push_back(TreeNode{});
    tree.nodes_.push_back(TreeNode{});
    stack.push_back({node.right, std::move(part.right), w.depth + 1});
    stack.push_back({node.left, std::move(part.left), w.depth + 1});
  }
  return tree;
}

double RegressionTree::predict(const Eigen::RowVectorXd& x) const {
  int at = 0;
  while (nodes_[at].feature >= 0) {
    const TreeNode& n = nodes_[at];
    at = (x(n.feature) < n.threshold) ? n.left : n.right;
  }
  return nodes_[at].value;
}

nlohmann::json RegressionTree::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& n : nodes_) {
    arr.push_back({n.feature, n.threshold, n.left, n.right, n.value});
  }
  return arr;
}

RegressionTree RegressionTree::from_json(const nlohmann::json& j) {
  RegressionTree tree;
  for (const auto& e : j) {
    tree.nodes_.push_back(TreeNode{e[0].get<int>(), e[1].get<double>(),
                                   e[2].get<int>(), e[3].get<int>(),
                                   e[4].get<double>()});
  }
  return tree;
}

GradientBoostedTrees GradientBoostedTrees::fit(
    const Eigen::MatrixXd& features, const std::vector<double>& targets,
    const std::vector<double>& weights, const TreeHyper& hyper) {
  const int n = static_cast<int>(features.rows());
  if (n < 1 || static_cast<int>(targets.size()) != n ||
      static_cast<int>(weights.size()) != n) {
    throw LengthMismatch("boosted trees: features/targets/weights disagree");
  }

  GradientBoostedTrees model;
  model.hyper_ = hyper;

  double sw = 0.0, swy = 0.0;
  for (int i = 0; i < n; ++i) {
    sw += weights[i];
    swy += weights[i] * targets[i];
  }
  model.base_ = (sw > 0.0) ? swy / sw : 0.0;

  std::vector<double> score(n, model.base_);
  std::vector<double> residual(n);
  model.iteration_loss_.reserve(hyper.n_estimators);

  for (int t = 0; t < hyper.n_estimators; ++t) {
    for (int i = 0; i < n; ++i) residual[i] = targets[i] - score[i];
    RegressionTree tree = RegressionTree::fit(features, residual, weights,
                                              hyper.max_depth, hyper.l2_leaf);
    double loss = 0.0;
    for (int i = 0; i < n; ++i) {
      score[i] += hyper.learning_rate * tree.predict(features.row(i));
      const double r = targets[i] - score[i];
      loss += weights[i] * r * r;
    }
    model.iteration_loss_.push_back(loss);
    model.trees_.push_back(std::move(tree));
  }
  return model;
}

double GradientBoostedTrees::predict(const Eigen::RowVectorXd& x) const {
  double v = base_;
  for (const auto& t : trees_) v += hyper_.learning_rate * t.predict(x);
  return v;
}

std::vector<double> GradientBoostedTrees::predict_batch(
    const Eigen::MatrixXd& features) const {
  std::vector<double> out(features.rows());
  for (Eigen::Index i = 0; i < features.rows(); ++i) {
    out[i] = predict(features.row(i));
  }
  return out;
}

double GradientBoostedTrees::leaf_norm_sq() const {
  double s = 0.0;
  for (const auto& t : trees_) {
    for (const auto& n : t.nodes()) {
      if (n.feature < 0) s += n.value * n.value;
    }
  }
  return s;
}

nlohmann::json GradientBoostedTrees::to_json() const {
  nlohmann::json trees = nlohmann::json::array();
  for (const auto& t : trees_) trees.push_back(t.to_json());
  return {{"base", base_},
          {"hyper",
           {{"n_estimators", hyper_.n_estimators},
            {"learning_rate", hyper_.learning_rate},
            {"max_depth", hyper_.max_depth},
            {"l2_leaf", hyper_.l2_leaf}}},
          {"trees", std::move(trees)}};
}

GradientBoostedTrees GradientBoostedTrees::from_json(const nlohmann::json& j) {
  GradientBoostedTrees model;
  model.base_ = j.at("base").get<double>();
  const auto& h = j.at("hyper");
  model.hyper_ = TreeHyper{h.at("n_estimators").get<int>(),
                           h.at("learning_rate").get<double>(),
                           h.at("max_depth").get<int>(),
                           h.at("l2_leaf").get<double>()};
  for (const auto& t : j.at("trees")) {
    model.trees_.push_back(RegressionTree::from_json(t));
  }
  return model;
}

}  // namespace smh
