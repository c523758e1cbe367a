//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_CONFIG_HPP_
#define SMH_CONFIG_HPP_

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "smh/experiment.hpp"

namespace smh {

/// Flat key-value config file: `key = value` lines, `#` comments, quoted or
/// bare strings, numbers, booleans, and [a, b, c] lists.
class KeyValueFile {
 public:
  static KeyValueFile parse_file(const std::string& path);
  static KeyValueFile parse_text(const std::string& text);

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_list(const std::string& key) const;

  const std::map<std::string, std::vector<std::string>>& entries() const {
    return values_;
  }

 private:
  std::map<std::string, std::vector<std::string>> values_;  // raw tokens
};

/// Fully resolved run configuration: dataset location, augmentation and
/// model hyperparameters, experiment layout, output directory.
struct RunConfig {
  std::string dataset_path;
  std::string smiles_col = "smiles";
  std::string target_col = "target";
  std::string out_dir;  // empty selects runs/run_<timestamp>
  ExperimentConfig exp;
  bool emit_svg = false;
  int threads = 0;  // 0 keeps the hardware default
  int plot_points = 201;
  // expert override for the relevance function: flattened (y, phi) pairs,
  // e.g. relevance_points = [-5, 1, 0, 0.1, 3, 0]; empty = extremes method
  std::vector<std::pair<double, double>> relevance_points;

  static RunConfig from_file(const std::string& path);
  static RunConfig from_kv(const KeyValueFile& kv);

  /// Validate ranges and referenced files; throws Error with a message.
  void validate(bool need_dataset = true) const;

  /// Full resolved echo, embedded in every report.
  nlohmann::json echo_json() const;
};

}  // namespace smh

#endif  // SMH_CONFIG_HPP_
