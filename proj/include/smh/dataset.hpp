//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_DATASET_HPP_
#define SMH_DATASET_HPP_

#include <string>
#include <vector>

#include "smh/graph.hpp"

namespace smh {

struct DatasetRecord {
  Graph graph;
  double target;
  int source_row;  // 0-based data row in the source file
};

/// Ordered collection of (graph, target) pairs. Every graph has min degree
/// >= 1 and every target is finite; rows violating that were skipped.
struct Dataset {
  std::vector<DatasetRecord> records;
  std::string name;
  int rows_total = 0;
  int rows_skipped = 0;

  int size() const { return static_cast<int>(records.size()); }
  std::vector<double> targets() const;
  std::vector<Graph> graphs() const;
  int min_node_count() const;
};

/// Load a CSV of (SMILES, target) pairs. Unparseable rows, non-finite
/// targets, and graphs with isolated nodes are skipped and counted; record
/// order follows the file. Rows are parsed in parallel.
Dataset load_csv(const std::string& path,
                 const std::string& smiles_column = "smiles",
                 const std::string& target_column = "target");

/// RFC-4180 style reader: quoted fields, doubled quotes, CR/LF, embedded
/// newlines inside quotes. Exposed for the CLI stats loader and tests.
std::vector<std::vector<std::string>> read_csv_rows(const std::string& path);

}  // namespace smh

#endif  // SMH_DATASET_HPP_
