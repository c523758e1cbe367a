//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "smh/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "smh/error.hpp"
#include "smh/parallel.hpp"
#include "smh/smiles.hpp"

namespace smh {

std::vector<double> Dataset::targets() const {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.target);
  return out;
}

std::vector<Graph> Dataset::graphs() const {
  std::vector<Graph> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.graph);
  return out;
}

int Dataset::min_node_count() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& r : records) m = std::min(m, r.graph.node_count());
  return records.empty() ? 0 : m;
}

std::vector<std::vector<std::string>> read_csv_rows(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false;
  bool cell_was_quoted = false;

  auto push_cell = [&] {
    if (!cell_was_quoted) {
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      cell = (b == std::string::npos) ? "" : cell.substr(b, e - b + 1);
    }
    row.push_back(std::move(cell));
    cell.clear();
    cell_was_quoted = false;
  };
  auto push_row = [&] {
    push_cell();
    if (!(row.size() == 1 && row[0].empty())) rows.push_back(std::move(row));
    row.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell.push_back(c);
      }
    } else if (c == '"' && cell.empty()) {
      quoted = true;
      cell_was_quoted = true;
    } else if (c == ',') {
      push_cell();
    } else if (c == '\n') {
      if (!cell.empty() && cell.back() == '\r') cell.pop_back();
      push_row();
    } else {
      cell.push_back(c);
    }
  }
  if (!cell.empty() || !row.empty()) {
    if (!cell.empty() && cell.back() == '\r') cell.pop_back();
    push_row();
  }
  return rows;
}

namespace {

std::optional<double> parse_target(const std::string& text) {
  if (text.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) return std::nullopt;
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

Dataset load_csv(const std::string& path, const std::string& smiles_column,
                 const std::string& target_column) {
  const auto rows = read_csv_rows(path);
  if (rows.empty()) throw EmptyDatasetError("no rows in " + path);

  const auto& header = rows.front();
  auto find_col = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      throw MissingColumnError("column '" + name + "' not found in " + path);
    }
    return static_cast<int>(it - header.begin());
  };
  const int smiles_idx = find_col(smiles_column);
  const int target_idx = find_col(target_column);

  const int n = static_cast<int>(rows.size()) - 1;
  std::vector<std::optional<DatasetRecord>> slots(n);
  std::vector<std::string> warnings(n);

  parallel_for_index(n, [&](int r) {
    const auto& row = rows[r + 1];
    const int cols = static_cast<int>(row.size());
    if (smiles_idx >= cols || target_idx >= cols) return;
    const auto target = parse_target(row[target_idx]);
    if (!target) return;
    try {
      std::string note;
      Graph g = parse_smiles(row[smiles_idx], &note);
      if (!note.empty()) warnings[r] = note;
      if (g.min_degree() < 1) return;  // isolated atoms are dropped
      slots[r] = DatasetRecord{std::move(g), *target, r};
    } catch (const ParseError&) {
      // skipped, counted below
    }
  });

  Dataset d;
  d.name = path;
  d.rows_total = n;
  for (int r = 0; r < n; ++r) {
    if (!warnings[r].empty()) {
      std::cerr << "[smh] warning: row " << r << ": " << warnings[r] << "\n";
    }
    if (slots[r]) {
      d.records.push_back(std::move(*slots[r]));
    } else {
      ++d.rows_skipped;
    }
  }
  if (d.records.empty()) {
    throw EmptyDatasetError("no usable rows in " + path);
  }
  return d;
}

}  // namespace smh
