//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "smh/spectral_map.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "smh/error.hpp"
#include "smh/metrics.hpp"
#include "smh/parallel.hpp"

namespace smh {

std::string to_string(SpectralMode mode) {
  return mode == SpectralMode::eigenvalues ? "eigenvalues" : "gft";
}

SpectralMode spectral_mode_from_string(const std::string& name) {
  if (name == "eigenvalues") return SpectralMode::eigenvalues;
  if (name == "gft" || name == "gft_coefficients") {
    return SpectralMode::gft_coefficients;
  }
  throw Error("unknown spectral mode: " + name);
}

SpectralEmbedding embed(const SpectralDecomposition& decomp, int k,
                        SpectralMode mode) {
  if (k < 1) throw Error("embedding size k must be >= 1");
  const int n = static_cast<int>(decomp.eigenvalues.size());
  SpectralEmbedding e;
  e.mode = mode;
  e.true_dimension = std::min(k, n);
  e.coefficients = Eigen::VectorXd::Zero(k);
  const auto& source = (mode == SpectralMode::eigenvalues)
                           ? decomp.eigenvalues
                           : decomp.gft_coefficients;
  e.coefficients.head(e.true_dimension) = source.head(e.true_dimension);
  return e;
}

namespace {

void postprocess(Eigen::VectorXd& v, SpectralMode mode) {
  if (mode != SpectralMode::eigenvalues) return;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v(i) = std::clamp(v(i), 0.0, 2.0);
  }
  std::sort(v.data(), v.data() + v.size());
}

}  // namespace

SpectrumRegressor SpectrumRegressor::fit(
    const std::vector<double>& targets,
    const std::vector<SpectralEmbedding>& embeddings,
    const RelevanceFunction& relevance, const TreeHyper& hyper,
    std::uint64_t seed) {
  const int n = static_cast<int>(targets.size());
  if (n < 2) throw InsufficientDataError("spectrum regressor needs N >= 2");
  if (static_cast<int>(embeddings.size()) != n) {
    throw LengthMismatch("targets and embeddings disagree");
  }
  const int k = static_cast<int>(embeddings.front().coefficients.size());
  const SpectralMode mode = embeddings.front().mode;
  for (const auto& e : embeddings) {
    if (e.coefficients.size() != k || e.mode != mode) {
      throw LengthMismatch("inconsistent embedding dimensions");
    }
  }
  for (const double y : targets) {
    if (!std::isfinite(y)) throw NonFiniteTargetError("non-finite target");
  }

  // weights renormalized to mean 1 over the contributing (phi > 0) samples,
  // so zero-weight rows behave exactly like deleted rows
  std::vector<double> phi(n), weights(n);
  double phi_sum = 0.0;
  int phi_live = 0;
  for (int i = 0; i < n; ++i) {
    phi[i] = relevance(targets[i]);
    phi_sum += phi[i];
    if (phi[i] > 0.0) ++phi_live;
  }
  double mean_phi = phi_live > 0 ? phi_sum / static_cast<double>(phi_live) : 0.0;
  if (mean_phi > 0.0) {
    for (int i = 0; i < n; ++i) weights[i] = phi[i] / mean_phi;
  } else {
    std::fill(weights.begin(), weights.end(), 1.0);  // all-zero relevance
    mean_phi = 1.0;
  }

  Eigen::MatrixXd features(n, 1);
  for (int i = 0; i < n; ++i) features(i, 0) = targets[i];

  SpectrumRegressor model;
  model.mode_ = mode;
  model.hyper_ = hyper;
  model.seed_ = seed;
  model.ensembles_.resize(k);
  model.summary_.per_dimension_loss.resize(k);

  parallel_for_index(k, [&](int j) {
    std::vector<double> column(n);
    for (int i = 0; i < n; ++i) column[i] = embeddings[i].coefficients(j);
    auto ensemble = GradientBoostedTrees::fit(features, column, weights, hyper);
    // convert the recorded weighted SSE back to the phi scale, / N
    std::vector<double> losses = ensemble.iteration_loss();
    for (double& l : losses) l *= mean_phi / static_cast<double>(n);
    model.summary_.per_dimension_loss[j] = std::move(losses);
    model.ensembles_[j] = std::move(ensemble);
  });

  double data_term = 0.0;
  double leaf_sq = 0.0;
  for (int j = 0; j < k; ++j) {
    if (!model.summary_.per_dimension_loss[j].empty()) {
      data_term += model.summary_.per_dimension_loss[j].back();
    }
    leaf_sq += model.ensembles_[j].leaf_norm_sq();
  }
  model.summary_.final_data_term = data_term;
  model.summary_.regularization = 0.5 * hyper.l2_leaf * leaf_sq;
  return model;
}

Eigen::VectorXd SpectrumRegressor::predict_raw(double y) const {
  Eigen::RowVectorXd x(1);
  x(0) = y;
  Eigen::VectorXd out(k());
  for (int j = 0; j < k(); ++j) out(j) = ensembles_[j].predict(x);
  return out;
}

SpectralEmbedding SpectrumRegressor::predict(double y) const {
  SpectralEmbedding e;
  e.mode = mode_;
  e.true_dimension = k();
  e.coefficients = predict_raw(y);
  postprocess(e.coefficients, mode_);
  return e;
}

std::string SpectrumRegressor::serialize() const {
  nlohmann::json ensembles = nlohmann::json::array();
  for (const auto& e : ensembles_) ensembles.push_back(e.to_json());
  const nlohmann::json j = {{"magic", "SMHM1"},
                            {"k", k()},
                            {"mode", to_string(mode_)},
                            {"seed", seed_},
                            {"hyper",
                             {{"n_estimators", hyper_.n_estimators},
                              {"learning_rate", hyper_.learning_rate},
                              {"max_depth", hyper_.max_depth},
                              {"l2_leaf", hyper_.l2_leaf}}},
                            {"ensembles", std::move(ensembles)}};
  return j.dump();
}

SpectrumRegressor SpectrumRegressor::deserialize(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (j.value("magic", "") != std::string("SMHM1")) {
    throw Error("bad model file: missing SMHM1 magic");
  }
  SpectrumRegressor model;
  model.mode_ = spectral_mode_from_string(j.at("mode").get<std::string>());
  model.seed_ = j.at("seed").get<std::uint64_t>();
  const auto& h = j.at("hyper");
  model.hyper_ = TreeHyper{h.at("n_estimators").get<int>(),
                           h.at("learning_rate").get<double>(),
                           h.at("max_depth").get<int>(),
                           h.at("l2_leaf").get<double>()};
  for (const auto& e : j.at("ensembles")) {
    model.ensembles_.push_back(GradientBoostedTrees::from_json(e));
  }
  if (static_cast<int>(model.ensembles_.size()) != j.at("k").get<int>()) {
    throw Error("bad model file: ensemble count does not match k");
  }
  return model;
}

void SpectrumRegressor::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << serialize();
}

SpectrumRegressor SpectrumRegressor::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

std::vector<TreeHyper> HyperGrid::enumerate() const {
  std::vector<TreeHyper> out;
  for (const int e : n_estimators) {
    for (const double lr : learning_rate) {
      for (const int d : max_depth) {
        out.push_back(TreeHyper{e, lr, d, l2_leaf});
      }
    }
  }
  return out;
}

bool HyperGrid::single() const {
  return n_estimators.size() == 1 && learning_rate.size() == 1 &&
         max_depth.size() == 1;
}

TreeHyper select_spectrum_hyper(const std::vector<double>& targets,
                                const std::vector<SpectralEmbedding>& embeddings,
                                const RelevanceFunction& relevance,
                                const HyperGrid& grid, std::uint64_t seed,
                                double validation_fraction) {
  const int n = static_cast<int>(targets.size());
  const int n_val = std::max(1, static_cast<int>(n * validation_fraction));
  const int n_train = n - n_val;
  if (n_train < 2) throw InsufficientDataError("grid search needs N >= 3");

  const std::vector<double> train_y(targets.begin(), targets.begin() + n_train);
  const std::vector<SpectralEmbedding> train_s(embeddings.begin(),
                                               embeddings.begin() + n_train);

  TreeHyper best;
  double best_score = std::numeric_limits<double>::infinity();
  for (const auto& hyper : grid.enumerate()) {
    const auto model =
        SpectrumRegressor::fit(train_y, train_s, relevance, hyper, seed);
    // vector SERA over the validation slice
    std::vector<double> sq_err(n_val), phi(n_val);
    for (int i = 0; i < n_val; ++i) {
      const auto pred = model.predict(targets[n_train + i]);
      sq_err[i] =
          (pred.coefficients - embeddings[n_train + i].coefficients).squaredNorm();
      phi[i] = relevance(targets[n_train + i]);
    }
    const double score = sera_from_components(sq_err, phi, 1001);
    if (score < best_score) {
      best_score = score;
      best = hyper;
    }
  }
  return best;
}

}  // namespace smh
