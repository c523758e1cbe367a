//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_DATAGEN_HPP_
#define SMH_DATAGEN_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "smh/dataset.hpp"
#include "smh/graph.hpp"
#include "smh/rng.hpp"

namespace smh {

/// Deterministic generators for demo corpora and benchmarks. The molecule
/// generator emits strings from the supported SMILES subset with a
/// left-tailed, structure-derived target, mimicking the shape of the common
/// solubility benchmarks without shipping their data.

struct MoleculeCorpusOptions {
  int count = 1128;
  std::uint64_t seed = 7;
  int min_atoms = 6;
  int max_atoms = 42;
};

/// Random molecule-like SMILES: chains of organic-subset atoms with
/// branches, rings, occasional bracket atoms, and bond symbols. The
/// optional out-params receive the generator's own atom/bond bookkeeping,
/// an independent oracle for the parser.
std::string random_smiles(Rng& rng, int min_atoms, int max_atoms,
                          int* atom_count = nullptr, int* bond_count = nullptr);

/// CSV with header "smiles,target"; one row per molecule.
void write_molecule_csv(const std::string& path,
                        const MoleculeCorpusOptions& options);

/// The same corpus assembled in memory (rows that parse cleanly, which is
/// all of them by construction).
Dataset molecule_dataset(const MoleculeCorpusOptions& options);

/// Random connected graph on n nodes: a random spanning tree plus extra
/// edges with the given probability.
Graph random_connected_graph(Rng& rng, int n, double extra_edge_prob);

struct GraphCorpusOptions {
  int count = 800;
  std::uint64_t seed = 17;
  int min_nodes = 10;
  int max_nodes = 24;
};

/// Benchmark corpus: graph density follows a latent exponential variable,
/// and the target is a noisy function of the graph's spectral profile with
/// a long left tail (rare low values are the relevant ones).
Dataset random_graph_dataset(const GraphCorpusOptions& options);

}  // namespace smh

#endif  // SMH_DATAGEN_HPP_
