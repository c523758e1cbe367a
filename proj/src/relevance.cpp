//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "smh/relevance.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>

#include "smh/error.hpp"
#include "smh/parallel.hpp"

namespace smh {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310005;

double sign(double v) { return (v > 0.0) - (v < 0.0); }

/// Fritsch-Carlson slopes for strictly increasing x. Interior slopes are a
/// weighted harmonic mean of adjacent secants (zero across sign changes);
/// endpoint slopes use the shape-preserving three-point rule.
std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  const int n = static_cast<int>(x.size());
  std::vector<double> m(n, 0.0);
  if (n == 1) return m;
  std::vector<double> h(n - 1), d(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    h[i] = x[i + 1] - x[i];
    d[i] = (y[i + 1] - y[i]) / h[i];
  }
  if (n == 2) {
    m[0] = m[1] = d[0];
    return m;
  }
  for (int i = 1; i < n - 1; ++i) {
    if (d[i - 1] == 0.0 || d[i] == 0.0 || sign(d[i - 1]) != sign(d[i])) {
      m[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
  }
  auto endpoint = [](double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (sign(s) != sign(d0)) {
      s = 0.0;
    } else if (sign(d0) != sign(d1) && std::abs(s) > 3.0 * std::abs(d0)) {
      s = 3.0 * d0;
    }
    return s;
  };
  m[0] = endpoint(h[0], h[1], d[0], d[1]);
  m[n - 1] = endpoint(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
  return m;
}

std::vector<ControlPoint> build_points(std::vector<std::pair<double, double>> pts) {
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].first == pts[i - 1].first) {
      throw DegenerateTargetsError("duplicate control point y value");
    }
  }
  if (pts.size() < 2) {
    throw DegenerateTargetsError("at least two control points required");
  }
  std::vector<double> xs, ys;
  for (const auto& [x, y] : pts) {
    xs.push_back(x);
    ys.push_back(std::clamp(y, 0.0, 1.0));
  }
  const auto slopes = pchip_slopes(xs, ys);
  std::vector<ControlPoint> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.push_back({xs[i], ys[i], slopes[i]});
  }
  return out;
}

double quantile_type7(std::vector<double> sorted, double q) {
  const double pos = q * (static_cast<double>(sorted.size()) - 1.0);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

RelevanceFunction RelevanceFunction::extremes(
    const std::vector<double>& targets) {
  if (targets.size() < 2) {
    throw InsufficientDataError("extremes relevance needs >= 2 targets");
  }
  for (const double t : targets) {
    if (!std::isfinite(t)) throw NonFiniteTargetError("non-finite target");
  }
  const double lo = *std::min_element(targets.begin(), targets.end());
  const double hi = *std::max_element(targets.begin(), targets.end());
  if (lo == hi) {
    throw DegenerateTargetsError("all targets equal; relevance undefined");
  }
  const double mean =
      std::accumulate(targets.begin(), targets.end(), 0.0) /
      static_cast<double>(targets.size());

  std::vector<std::pair<double, double>> pts{{lo, 1.0}, {hi, 0.0}};
  if (mean > lo && mean < hi) pts.push_back({mean, 0.025});
  return RelevanceFunction(build_points(std::move(pts)));
}

RelevanceFunction RelevanceFunction::from_control_points(
    std::vector<std::pair<double, double>> points) {
  return RelevanceFunction(build_points(std::move(points)));
}

double RelevanceFunction::operator()(double y) const {
  const auto& p = points_;
  if (y <= p.front().y) return p.front().phi;
  if (y >= p.back().y) return p.back().phi;
  std::size_t hi = 1;
  while (p[hi].y < y) ++hi;  // few control points; linear scan is fine
  const auto& a = p[hi - 1];
  const auto& b = p[hi];
  const double h = b.y - a.y;
  const double t = (y - a.y) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double value = (2.0 * t3 - 3.0 * t2 + 1.0) * a.phi +
                       (t3 - 2.0 * t2 + t) * h * a.slope +
                       (-2.0 * t3 + 3.0 * t2) * b.phi +
                       (t3 - t2) * h * b.slope;
  return std::clamp(value, 0.0, 1.0);
}

DensityEstimate DensityEstimate::fit(const std::vector<double>& targets) {
  const auto n = targets.size();
  if (n < 2) throw InsufficientDataError("KDE needs >= 2 targets");
  for (const double t : targets) {
    if (!std::isfinite(t)) throw NonFiniteTargetError("non-finite target");
  }

  const double mean =
      std::accumulate(targets.begin(), targets.end(), 0.0) /
      static_cast<double>(n);
  double ss = 0.0;
  for (const double t : targets) ss += (t - mean) * (t - mean);
  const double sigma = std::sqrt(ss / static_cast<double>(n - 1));

  std::vector<double> sorted(targets);
  std::sort(sorted.begin(), sorted.end());
  const double iqr = quantile_type7(sorted, 0.75) - quantile_type7(sorted, 0.25);

  const double scale = std::min(sigma, iqr / 1.34);
  const double h =
      std::max(0.9 * scale * std::pow(static_cast<double>(n), -0.2), 1e-6);

  const bool degenerate = sigma == 0.0 && iqr == 0.0;
  if (degenerate) {
    std::cerr << "[smh] warning: all targets equal; KDE bandwidth floored\n";
  }
  return DensityEstimate(targets, h, degenerate);
}

double DensityEstimate::operator()(double y) const {
  const double h = bandwidth_;
  double sum = 0.0;
  for (const double t : targets_) {
    const double u = (y - t) / h;
    sum += std::exp(-0.5 * u * u);
  }
  return sum / (static_cast<double>(targets_.size()) * h * kSqrt2Pi);
}

std::vector<double> DensityEstimate::eval_grid(
    const std::vector<double>& ys) const {
  std::vector<double> out(ys.size());
  const int n = static_cast<int>(ys.size());
#pragma omp parallel for schedule(static) num_threads(max_threads())
  for (int i = 0; i < n; ++i) {
    out[i] = (*this)(ys[i]);
  }
  return out;
}

double sampling_weight(const RelevanceFunction& relevance,
                       const DensityEstimate& density, double y, double eps) {
  const double phi = relevance(y);
  if (phi == 0.0) return 0.0;
  return phi / (density(y) + eps);
}

}  // namespace smh
