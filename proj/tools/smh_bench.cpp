//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "smh/datagen.hpp"
#include "smh/manifold.hpp"
#include "smh/parallel.hpp"
#include "smh/reconstruct.hpp"
#include "smh/reference.hpp"
#include "smh/relevance.hpp"
#include "smh/spectral.hpp"

namespace {

double time_ms(const std::function<void()>& fn, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(
        best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial-reference vs OpenMP kernel comparison"};
  int molecules = 600;
  int grid = 20000;
  int repeats = 3;
  app.add_option("--molecules", molecules, "corpus size");
  app.add_option("--grid", grid, "KDE grid points");
  app.add_option("--repeats", repeats, "repetitions, best-of");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const int hw_threads = smh::max_threads();
  std::printf("threads: %d\n", hw_threads);
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  smh::MoleculeCorpusOptions mol_opts;
  mol_opts.count = molecules;
  const auto dataset = smh::molecule_dataset(mol_opts);
  const auto graphs = dataset.graphs();
  const auto targets = dataset.targets();

  // batch eigendecomposition: classical Jacobi loop vs cyclic Jacobi + OpenMP
  const double decomp_serial = time_ms(
      [&] {
        std::vector<double> values;
        for (const auto& g : graphs) {
          smh::reference::eigh_classical_jacobi(smh::normalized_laplacian(g),
                                                values);
        }
      },
      repeats);
  const double decomp_parallel =
      time_ms([&] { smh::spectral_decompose_all(graphs); }, repeats);
  report("spectral_decompose_all", decomp_serial, decomp_parallel);

  // KDE over a dense grid
  const auto density = smh::DensityEstimate::fit(targets);
  std::vector<double> ys(grid);
  for (int i = 0; i < grid; ++i) {
    ys[i] = -12.0 + 16.0 * static_cast<double>(i) / (grid - 1);
  }
  const double kde_serial = time_ms(
      [&] {
        double sink = 0.0;
        for (const double y : ys) {
          sink += smh::reference::kde_eval(targets, density.bandwidth(), y);
        }
        volatile double keep = sink;
        (void)keep;
      },
      repeats);
  const double kde_parallel = time_ms([&] { density.eval_grid(ys); }, repeats);
  report("kde_eval_grid", kde_serial, kde_parallel);

  // conditional covariance at production scale: wide embeddings, many rows
  const int k = 32;
  const int rows = 4000;
  smh::Rng cov_rng(9);
  std::vector<double> cov_targets;
  std::vector<smh::SpectralEmbedding> cov_embeddings;
  for (int i = 0; i < rows; ++i) {
    cov_targets.push_back(cov_rng.uniform(-4.0, 2.0));
    smh::SpectralEmbedding e;
    e.mode = smh::SpectralMode::gft_coefficients;
    e.true_dimension = k;
    e.coefficients = Eigen::VectorXd(k);
    for (int j = 0; j < k; ++j) e.coefficients(j) = cov_rng.normal();
    cov_embeddings.push_back(std::move(e));
  }
  const auto cov_relevance = smh::RelevanceFunction::extremes(cov_targets);
  smh::TreeHyper hyper;
  hyper.n_estimators = 20;
  auto regressor = smh::SpectrumRegressor::fit(cov_targets, cov_embeddings,
                                               cov_relevance, hyper, 1);
  const auto cov_manifold = smh::make_manifold(
      std::move(regressor), cov_targets, cov_embeddings, 1.0, 1e-6);

  const double cov_serial = time_ms(
      [&] {
        for (int q = 0; q < 20; ++q) {
          const double y = cov_targets[q];
          const auto w = smh::kernel_weights(cov_manifold, y);
          std::vector<double> wv(w.data(), w.data() + w.size());
          const auto mu = cov_manifold.regressor.predict(y).coefficients;
          smh::reference::conditional_covariance(
              cov_manifold.training_embeddings, wv, mu, 1e-6);
        }
      },
      repeats);
  const double cov_parallel = time_ms(
      [&] {
        for (int q = 0; q < 20; ++q) {
          smh::conditional_covariance(cov_manifold, cov_targets[q]);
        }
      },
      repeats);
  report("conditional_covariance", cov_serial, cov_parallel);

  // augmentation reuses the molecule pipeline
  const auto decomps = smh::spectral_decompose_all(graphs);
  const auto relevance = smh::RelevanceFunction::extremes(targets);
  const int mol_k = std::min(16, dataset.min_node_count());
  std::vector<smh::SpectralEmbedding> embeddings;
  for (const auto& d : decomps) {
    embeddings.push_back(smh::embed(d, mol_k, smh::SpectralMode::eigenvalues));
  }
  auto mol_regressor =
      smh::SpectrumRegressor::fit(targets, embeddings, relevance, hyper, 1);
  const auto manifold = smh::make_manifold(std::move(mol_regressor), targets,
                                           embeddings, 1.0, 1e-6);

  // end-to-end augmentation, 1 thread vs all
  smh::AugmentationConfig aug;
  aug.k = mol_k;
  aug.sampling_fraction = 0.2;
  aug.master_seed = 3;
  const double aug_serial = time_ms(
      [&] {
        smh::set_max_threads(1);
        smh::augment(dataset, manifold, relevance, density, aug, decomps);
        smh::set_max_threads(hw_threads);
      },
      repeats);
  const double aug_parallel = time_ms(
      [&] { smh::augment(dataset, manifold, relevance, density, aug, decomps); },
      repeats);
  report("augment", aug_serial, aug_parallel);

  return 0;
}
