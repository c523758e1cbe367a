//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "smh/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "smh/error.hpp"

namespace smh {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                        (s.front() == '\'' && s.back() == '\''))) {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

std::vector<std::string> split_list(const std::string& body) {
  std::vector<std::string> out;
  std::string cur;
  for (const char c : body) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  const std::string last = trim(cur);
  if (!last.empty()) out.push_back(last);
  return out;
}

double to_double(const std::string& token, const std::string& key) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size()) {
    throw Error("config: key '" + key + "' expects a number, got '" + token + "'");
  }
  return v;
}

}  // namespace

KeyValueFile KeyValueFile::parse_text(const std::string& text) {
  KeyValueFile kv;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      // a '#' inside quotes stays; only strip when outside
      bool in_quote = false;
      std::string kept;
      for (const char c : line) {
        if (c == '"') in_quote = !in_quote;
        if (c == '#' && !in_quote) break;
        kept.push_back(c);
      }
      line = kept;
    }
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw Error("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty()) {
      throw Error("config line " + std::to_string(line_no) + ": empty key");
    }
    std::vector<std::string> tokens;
    if (!value.empty() && value.front() == '[') {
      if (value.back() != ']') {
        throw Error("config line " + std::to_string(line_no) + ": unterminated list");
      }
      for (const auto& item : split_list(value.substr(1, value.size() - 2))) {
        tokens.push_back(unquote(item));
      }
    } else {
      tokens.push_back(unquote(value));
    }
    kv.values_[key] = std::move(tokens);
  }
  return kv;
}

KeyValueFile KeyValueFile::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

bool KeyValueFile::has(const std::string& key) const {
  return values_.count(key) > 0;
}

std::string KeyValueFile::get_string(const std::string& key,
                                     const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second.front();
}

double KeyValueFile::get_double(const std::string& key, double fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : to_double(it->second.front(), key);
}

int KeyValueFile::get_int(const std::string& key, int fallback) const {
  return static_cast<int>(get_double(key, fallback));
}

bool KeyValueFile::get_bool(const std::string& key, bool fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const std::string& v = it->second.front();
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw Error("config: key '" + key + "' expects a boolean, got '" + v + "'");
}

std::vector<double> KeyValueFile::get_list(const std::string& key) const {
  const auto it = values_.find(key);
  std::vector<double> out;
  if (it == values_.end()) return out;
  for (const auto& token : it->second) out.push_back(to_double(token, key));
  return out;
}

RunConfig RunConfig::from_kv(const KeyValueFile& kv) {
  RunConfig c;
  c.dataset_path = kv.get_string("dataset", "");
  c.smiles_col = kv.get_string("smiles_col", c.smiles_col);
  c.target_col = kv.get_string("target_col", c.target_col);
  c.out_dir = kv.get_string("out", "");
  c.emit_svg = kv.get_bool("svg", c.emit_svg);
  c.threads = kv.get_int("threads", c.threads);
  c.plot_points = kv.get_int("plot_points", c.plot_points);

  auto& aug = c.exp.aug;
  aug.sampling_fraction = kv.get_double("fraction", aug.sampling_fraction);
  aug.binarization_cutoff = kv.get_double("cutoff", aug.binarization_cutoff);
  aug.gamma = kv.get_double("gamma", aug.gamma);
  aug.eps = kv.get_double("eps", aug.eps);
  aug.k = kv.get_int("k", aug.k);
  aug.spectral_mode =
      spectral_mode_from_string(kv.get_string("spectral_mode", "eigenvalues"));
  aug.master_seed =
      static_cast<std::uint64_t>(kv.get_double("seed", 0.0));
  aug.target_jitter = kv.get_bool("jitter", aug.target_jitter);
  aug.retry_budget = kv.get_int("retry_budget", aug.retry_budget);
  aug.cov_ridge = kv.get_double("cov_ridge", aug.cov_ridge);

  c.exp.folds = kv.get_int("folds", c.exp.folds);
  c.exp.downstream_k = kv.get_int("downstream_k", c.exp.downstream_k);
  c.exp.bins = kv.get_int("bins", c.exp.bins);
  c.exp.sera_grid = kv.get_int("sera_grid", c.exp.sera_grid);

  // hyperparameters accept either a single value or a search list
  auto load_grid = [&](const std::string& key, auto& single_field,
                       auto& grid_field) {
    const auto list = kv.get_list(key);
    if (list.empty()) return;
    using Elem = typename std::remove_reference_t<decltype(grid_field)>::value_type;
    grid_field.clear();
    for (const double v : list) grid_field.push_back(static_cast<Elem>(v));
    single_field = grid_field.front();
    if (list.size() > 1) c.exp.grid_search = true;
  };
  load_grid("estimators", c.exp.spectrum_hyper.n_estimators,
            c.exp.grid.n_estimators);
  load_grid("learning_rate", c.exp.spectrum_hyper.learning_rate,
            c.exp.grid.learning_rate);
  load_grid("max_depth", c.exp.spectrum_hyper.max_depth, c.exp.grid.max_depth);
  c.exp.spectrum_hyper.l2_leaf =
      kv.get_double("l2_leaf", c.exp.spectrum_hyper.l2_leaf);
  c.exp.grid.l2_leaf = c.exp.spectrum_hyper.l2_leaf;
  c.exp.grid_search = kv.get_bool("grid_search", c.exp.grid_search);

  c.exp.downstream_hyper.n_estimators =
      kv.get_int("downstream_estimators", c.exp.downstream_hyper.n_estimators);
  c.exp.downstream_hyper.learning_rate = kv.get_double(
      "downstream_learning_rate", c.exp.downstream_hyper.learning_rate);
  c.exp.downstream_hyper.max_depth =
      kv.get_int("downstream_max_depth", c.exp.downstream_hyper.max_depth);

  const auto points = kv.get_list("relevance_points");
  if (!points.empty()) {
    if (points.size() % 2 != 0) {
      throw Error("relevance_points expects flattened (y, phi) pairs");
    }
    for (std::size_t i = 0; i < points.size(); i += 2) {
      c.relevance_points.emplace_back(points[i], points[i + 1]);
    }
  }
  c.exp.relevance_points = c.relevance_points;
  return c;
}

RunConfig RunConfig::from_file(const std::string& path) {
  return from_kv(KeyValueFile::parse_file(path));
}

void RunConfig::validate(bool need_dataset) const {
  if (need_dataset) {
    if (dataset_path.empty()) throw Error("no dataset given (--dataset or config)");
    if (!std::filesystem::exists(dataset_path)) {
      throw IoError("file not found: " + dataset_path);
    }
  }
  exp.aug.validate();
  if (exp.folds < 2) throw Error("folds must be >= 2");
  if (exp.downstream_k < 1) throw Error("downstream_k must be >= 1");
  if (exp.bins < 1) throw Error("bins must be >= 1");
  if (exp.sera_grid < 2) throw Error("sera_grid must be >= 2");
  if (plot_points < 2) throw Error("plot_points must be >= 2");
  if (threads < 0) throw Error("threads must be >= 0");
}

nlohmann::json RunConfig::echo_json() const {
  auto grid_json = [](const auto& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : v) arr.push_back(x);
    return arr;
  };
  nlohmann::json points = nlohmann::json::array();
  for (const auto& [y, phi] : relevance_points) {
    points.push_back(y);
    points.push_back(phi);
  }
  // the output directory is run metadata, not configuration: leaving it out
  // keeps artifacts byte-identical across re-runs into fresh directories
  return {
      {"dataset", dataset_path},
      {"smiles_col", smiles_col},
      {"target_col", target_col},
      {"svg", emit_svg},
      {"threads", threads},
      {"plot_points", plot_points},
      {"fraction", exp.aug.sampling_fraction},
      {"cutoff", exp.aug.binarization_cutoff},
      {"gamma", exp.aug.gamma},
      {"eps", exp.aug.eps},
      {"k", exp.aug.k},
      {"spectral_mode", to_string(exp.aug.spectral_mode)},
      {"seed", exp.aug.master_seed},
      {"jitter", exp.aug.target_jitter},
      {"retry_budget", exp.aug.retry_budget},
      {"cov_ridge", exp.aug.cov_ridge},
      {"folds", exp.folds},
      {"downstream_k", exp.downstream_k},
      {"bins", exp.bins},
      {"sera_grid", exp.sera_grid},
      {"grid_search", exp.grid_search},
      {"estimators", exp.spectrum_hyper.n_estimators},
      {"learning_rate", exp.spectrum_hyper.learning_rate},
      {"max_depth", exp.spectrum_hyper.max_depth},
      {"l2_leaf", exp.spectrum_hyper.l2_leaf},
      {"grid_estimators", grid_json(exp.grid.n_estimators)},
      {"grid_learning_rate", grid_json(exp.grid.learning_rate)},
      {"grid_max_depth", grid_json(exp.grid.max_depth)},
      {"downstream_estimators", exp.downstream_hyper.n_estimators},
      {"downstream_learning_rate", exp.downstream_hyper.learning_rate},
      {"downstream_max_depth", exp.downstream_hyper.max_depth},
      {"relevance_points", std::move(points)},
  };
}

}  // namespace smh
