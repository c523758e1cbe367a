//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_TREES_HPP_
#define SMH_TREES_HPP_

#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

namespace smh {

struct TreeHyper {
  int n_estimators = 100;     // grid: 10, 50, 100, 250
  double learning_rate = 0.1; // grid: 0.001, 0.01, 0.1
  int max_depth = 3;          // grid: 3, 5, 10
  double l2_leaf = 1.0;       // per-leaf L2 shrinkage in the leaf value
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double value = 0.0;  // leaf value, before the learning rate
};

/// Single regression tree fit to weighted residuals. Splits maximize
/// weighted variance reduction; candidate thresholds sit between distinct
/// feature values of positive-weight samples only, so zero-weight samples
/// cannot influence the fit. Leaf value = sum(w r) / (sum(w) + l2).
class RegressionTree {
 public:
  static RegressionTree fit(const Eigen::MatrixXd& features,
                            const std::vector<double>& residuals,
                            const std::vector<double>& weights, int max_depth,
                            double l2_leaf);

  double predict(const Eigen::RowVectorXd& x) const;
  const std::vector<TreeNode>& nodes() const { return nodes_; }

  nlohmann::json to_json() const;
  static RegressionTree from_json(const nlohmann::json& j);

 private:
  std::vector<TreeNode> nodes_;
};

/// Squared-error gradient boosting: the base score is the weighted target
/// mean, each stage fits a tree to the current residuals, and predictions
/// accumulate learning_rate * tree(x).
class GradientBoostedTrees {
 public:
  static GradientBoostedTrees fit(const Eigen::MatrixXd& features,
                                  const std::vector<double>& targets,
                                  const std::vector<double>& weights,
                                  const TreeHyper& hyper);

  double predict(const Eigen::RowVectorXd& x) const;
  std::vector<double> predict_batch(const Eigen::MatrixXd& features) const;

  /// Weighted MSE on the training set after each boosting stage, in the
  /// weights passed to fit (renormalization is the caller's business).
  const std::vector<double>& iteration_loss() const { return iteration_loss_; }

  /// Sum of squared leaf values across all trees (regularizer surrogate).
  double leaf_norm_sq() const;

  const TreeHyper& hyper() const { return hyper_; }

  nlohmann::json to_json() const;
  static GradientBoostedTrees from_json(const nlohmann::json& j);

 private:
  double base_ = 0.0;
  std::vector<RegressionTree> trees_;
  TreeHyper hyper_;
  std::vector<double> iteration_loss_;
};

}  // namespace smh

#endif  // SMH_TREES_HPP_
