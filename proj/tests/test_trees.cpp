//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "smh/rng.hpp"
#include "smh/trees.hpp"

using namespace smh;

TEST_SUITE_BEGIN("trees");

namespace {

Eigen::MatrixXd column(const std::vector<double>& v) {
  Eigen::MatrixXd m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

double weighted_mse(const GradientBoostedTrees& model,
                    const Eigen::MatrixXd& x, const std::vector<double>& y,
                    const std::vector<double>& w) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const double r = y[i] - model.predict(x.row(i));
    s += w[i] * r * r;
  }
  return s;
}

}  // namespace

TEST_CASE("constant targets give a constant predictor") {
  const auto x = column({0.0, 1.0, 2.0, 3.0});
  const std::vector<double> y{5.0, 5.0, 5.0, 5.0};
  const std::vector<double> w{1.0, 1.0, 1.0, 1.0};
  const auto model = GradientBoostedTrees::fit(x, y, w, TreeHyper{50, 0.1, 3, 1.0});
  for (double q : {-10.0, 0.5, 99.0}) {
    Eigen::RowVectorXd p(1);
    p << q;
    CHECK(model.predict(p) == doctest::Approx(5.0).epsilon(1e-9));
  }
}

TEST_CASE("fit beats the weighted-mean baseline on two clusters") {
  std::vector<double> xs, ys, ws;
  for (int i = 0; i < 20; ++i) {
    xs.push_back(i < 10 ? 0.0 + i * 0.01 : 5.0 + i * 0.01);
    ys.push_back(i < 10 ? 1.0 : -3.0);
    ws.push_back(i % 3 == 0 ? 2.0 : 1.0);
  }
  const auto x = column(xs);
  const auto model =
      GradientBoostedTrees::fit(x, ys, ws, TreeHyper{100, 0.1, 5, 1.0});

  double sw = 0.0, swy = 0.0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    sw += ws[i];
    swy += ws[i] * ys[i];
  }
  const double mean = swy / sw;
  double baseline = 0.0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    baseline += ws[i] * (ys[i] - mean) * (ys[i] - mean);
  }
  CHECK(weighted_mse(model, x, ys, ws) < baseline * 0.05);
}

TEST_CASE("zero-weight samples equal deleted samples") {
  Rng rng(4);
  std::vector<double> xs, ys, ws, xs_cut, ys_cut, ws_cut;
  for (int i = 0; i < 40; ++i) {
    const double x = rng.uniform(0.0, 10.0);
    const double y = std::sin(x) + 0.1 * rng.normal();
    const bool dead = (i % 5 == 0);
    xs.push_back(x);
    ys.push_back(y);
    ws.push_back(dead ? 0.0 : 1.0 + rng.uniform());
    if (!dead) {
      xs_cut.push_back(x);
      ys_cut.push_back(y);
      ws_cut.push_back(ws.back());
    }
  }
  const TreeHyper hyper{60, 0.1, 4, 1.0};
  const auto with_zeros = GradientBoostedTrees::fit(column(xs), ys, ws, hyper);
  const auto without =
      GradientBoostedTrees::fit(column(xs_cut), ys_cut, ws_cut, hyper);
  for (int q = 0; q <= 100; ++q) {
    Eigen::RowVectorXd p(1);
    p << q * 0.1;
    CHECK(with_zeros.predict(p) ==
          doctest::Approx(without.predict(p)).epsilon(1e-9));
  }
}

TEST_CASE("training loss is non-increasing per boosting stage") {
  Rng rng(8);
  std::vector<double> xs, ys, ws;
  for (int i = 0; i < 120; ++i) {
    xs.push_back(rng.uniform(-3.0, 3.0));
    ys.push_back(xs.back() * xs.back() + 0.3 * rng.normal());
    ws.push_back(0.5 + rng.uniform());
  }
  const auto model = GradientBoostedTrees::fit(column(xs), ys, ws,
                                               TreeHyper{80, 0.1, 3, 1.0});
  const auto& losses = model.iteration_loss();
  REQUIRE(losses.size() == 80);
  for (std::size_t i = 1; i < losses.size(); ++i) {
    CHECK(losses[i] <= losses[i - 1] + 1e-9);
  }
}

TEST_CASE("multi-feature splits pick the informative feature") {
  Rng rng(15);
  const int n = 200;
  Eigen::MatrixXd x(n, 3);
  std::vector<double> y(n), w(n, 1.0);
  for (int i = 0; i < n; ++i) {
    x(i, 0) = rng.normal();             // noise
    x(i, 1) = rng.uniform(-2.0, 2.0);   // signal
    x(i, 2) = rng.normal();             // noise
    y[i] = (x(i, 1) > 0.3) ? 4.0 : -1.0;
  }
  const auto model =
      GradientBoostedTrees::fit(x, y, w, TreeHyper{40, 0.2, 2, 1.0});
  Eigen::RowVectorXd hi(3), lo(3);
  hi << 0.0, 1.5, 0.0;
  lo << 0.0, -1.5, 0.0;
  CHECK(model.predict(hi) > 3.0);
  CHECK(model.predict(lo) < 0.0);
}

TEST_CASE("serialization round trip is exact") {
  Rng rng(16);
  std::vector<double> xs, ys, ws;
  for (int i = 0; i < 50; ++i) {
    xs.push_back(rng.uniform());
    ys.push_back(rng.normal());
    ws.push_back(1.0);
  }
  const auto model = GradientBoostedTrees::fit(column(xs), ys, ws,
                                               TreeHyper{30, 0.1, 3, 1.0});
  const auto text = model.to_json().dump();
  const auto clone = GradientBoostedTrees::from_json(nlohmann::json::parse(text));
  CHECK(clone.to_json().dump() == text);
  for (int q = 0; q < 20; ++q) {
    Eigen::RowVectorXd p(1);
    p << q * 0.05;
    CHECK(clone.predict(p) == model.predict(p));
  }
}

TEST_SUITE_END();
