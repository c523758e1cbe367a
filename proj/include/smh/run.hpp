//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_RUN_HPP_
#define SMH_RUN_HPP_

#include <string>

#include "smh/config.hpp"

namespace smh {

/// Resolved output directory for a run: config.out_dir when given, else
/// runs/run_<utc-timestamp>. Created on demand.
std::string resolve_run_dir(const RunConfig& config);

/// Fit on the full dataset and generate synthetic samples. Writes
/// synthetic.jsonl, stats.csv, model.json, and config_echo.json into the
/// run directory; returns its path.
std::string cmd_augment(const RunConfig& config);

/// Cross-validated baseline-vs-augmented comparison. Writes report.json
/// (and plots/bins.svg when svg is on) into the run directory; prints the
/// summary table to stdout.
std::string cmd_evaluate(const RunConfig& config);

/// Side-by-side structural statistics of two graph files (dataset CSV or
/// synthetic JSONL, sniffed by content). Prints the comparison table;
/// writes stats.csv when an output directory is configured.
std::string cmd_stats(const RunConfig& config, const std::string& original,
                      const std::string& synthetic);

/// Uniform-grid CSV of y, phi(y), p(y), w(y) over the dataset target range,
/// plus an optional SVG line plot.
std::string cmd_relevance_plot(const RunConfig& config);

}  // namespace smh

#endif  // SMH_RUN_HPP_
