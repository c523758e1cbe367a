//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_RELEVANCE_HPP_
#define SMH_RELEVANCE_HPP_

#include <utility>
#include <vector>

namespace smh {

struct ControlPoint {
  double y;
  double phi;
  double slope;
};

/// Piecewise monotone cubic map from target value to importance in [0, 1].
/// Interpolation uses Fritsch-Carlson (PCHIP) slopes, so each segment stays
/// monotone and never overshoots the control values. Outside the control
/// range the function extends as a constant.
class RelevanceFunction {
 public:
  /// Extremes construction: control points (min, 1), (mean, 0.025), (max, 0).
  /// Throws DegenerateTargetsError when min == max.
  static RelevanceFunction extremes(const std::vector<double>& targets);

  /// Custom control points (y, phi) with phi in [0, 1]; y values must be
  /// strictly increasing after sorting.
  static RelevanceFunction from_control_points(
      std::vector<std::pair<double, double>> points);

  double operator()(double y) const;

  const std::vector<ControlPoint>& control_points() const { return points_; }

 private:
  explicit RelevanceFunction(std::vector<ControlPoint> points)
      : points_(std::move(points)) {}
  std::vector<ControlPoint> points_;
};

/// Gaussian kernel density estimate over the training targets with a
/// Silverman-rule bandwidth: h = max(0.9 min(sigma, IQR/1.34) N^{-1/5}, 1e-6).
class DensityEstimate {
 public:
  static DensityEstimate fit(const std::vector<double>& targets);

  /// p(y) = (1/Nh) sum_i K((y - y_i)/h) with the standard normal kernel.
  double operator()(double y) const;

  /// Batch evaluation, parallel over grid points.
  std::vector<double> eval_grid(const std::vector<double>& ys) const;

  double bandwidth() const { return bandwidth_; }
  bool degenerate() const { return degenerate_; }
  const std::vector<double>& sample_targets() const { return targets_; }

 private:
  DensityEstimate(std::vector<double> targets, double h, bool degenerate)
      : targets_(std::move(targets)), bandwidth_(h), degenerate_(degenerate) {}
  std::vector<double> targets_;
  double bandwidth_;
  bool degenerate_;
};

/// w(y) = phi(y) / (p(y) + eps); zero exactly where phi is zero.
double sampling_weight(const RelevanceFunction& relevance,
                       const DensityEstimate& density, double y,
                       double eps = 1e-6);

}  // namespace smh

#endif  // SMH_RELEVANCE_HPP_
