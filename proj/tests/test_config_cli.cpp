//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "smh/config.hpp"
#include "smh/datagen.hpp"
#include "smh/error.hpp"
#include "smh/run.hpp"

using namespace smh;
namespace fs = std::filesystem;

TEST_SUITE_BEGIN("config-cli");

namespace {

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "smh_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  const auto path = (scratch_dir() / name).string();
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

std::string demo_csv() {
  static std::string path;
  if (path.empty()) {
    MoleculeCorpusOptions options;
    options.count = 120;
    options.seed = 31;
    path = (scratch_dir() / "demo.csv").string();
    write_molecule_csv(path, options);
  }
  return path;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(SMH_CLI_PATH) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("key-value parsing: types, lists, comments, quotes") {
  const auto kv = KeyValueFile::parse_text(
      "# a comment\n"
      "dataset = \"data/my file.csv\"  # trailing comment\n"
      "gamma = 0.5\n"
      "folds = 7\n"
      "jitter = false\n"
      "estimators = [10, 50]\n"
      "\n");
  CHECK(kv.get_string("dataset", "") == "data/my file.csv");
  CHECK(kv.get_double("gamma", 0.0) == 0.5);
  CHECK(kv.get_int("folds", 0) == 7);
  CHECK(kv.get_bool("jitter", true) == false);
  CHECK(kv.get_list("estimators") == std::vector<double>{10.0, 50.0});
  CHECK(kv.get_string("missing", "fallback") == "fallback");

  CHECK_THROWS_AS(KeyValueFile::parse_text("key_without_value\n"), Error);
  CHECK_THROWS_AS(
      KeyValueFile::parse_text("gamma = fast\n").get_double("gamma", 0.0),
      Error);
}

TEST_CASE("run config from file with grid detection") {
  const auto path = write_file("run.cfg",
                               "dataset = \"" + demo_csv() + "\"\n"
                               "k = 12\n"
                               "fraction = 0.15\n"
                               "cutoff = 0.2\n"
                               "gamma = 0.5\n"
                               "seed = 99\n"
                               "estimators = [10, 50, 100]\n"
                               "max_depth = 5\n");
  const auto config = RunConfig::from_file(path);
  CHECK(config.exp.aug.k == 12);
  CHECK(config.exp.aug.sampling_fraction == 0.15);
  CHECK(config.exp.aug.binarization_cutoff == 0.2);
  CHECK(config.exp.aug.gamma == 0.5);
  CHECK(config.exp.aug.master_seed == 99);
  CHECK(config.exp.grid_search);  // a multi-valued key switches it on
  CHECK(config.exp.grid.n_estimators == std::vector<int>{10, 50, 100});
  CHECK(config.exp.spectrum_hyper.max_depth == 5);
  CHECK(config.exp.grid.max_depth == std::vector<int>{5});
  CHECK_NOTHROW(config.validate());
}

TEST_CASE("validation rejects bad values and missing files") {
  RunConfig config;
  config.dataset_path = demo_csv();
  CHECK_NOTHROW(config.validate());
  config.exp.aug.sampling_fraction = 2.0;
  CHECK_THROWS_AS(config.validate(), Error);

  RunConfig missing;
  missing.dataset_path = "/no/such/file.csv";
  CHECK_THROWS_AS(missing.validate(), IoError);
}

TEST_CASE("cmd_augment writes the full artifact set") {
  RunConfig config;
  config.dataset_path = demo_csv();
  config.out_dir = (scratch_dir() / "aug_run").string();
  config.exp.aug.k = 8;
  config.exp.aug.master_seed = 5;
  config.exp.spectrum_hyper = TreeHyper{30, 0.1, 3, 1.0};
  fs::remove_all(config.out_dir);

  const auto dir = cmd_augment(config);
  CHECK(fs::exists(fs::path(dir) / "synthetic.jsonl"));
  CHECK(fs::exists(fs::path(dir) / "stats.csv"));
  CHECK(fs::exists(fs::path(dir) / "model.json"));
  CHECK(fs::exists(fs::path(dir) / "config_echo.json"));

  const auto echo =
      nlohmann::json::parse(slurp(fs::path(dir) / "config_echo.json"));
  CHECK(echo.at("seed").get<int>() == 5);
  CHECK(echo.at("k").get<int>() == 8);

  const auto samples = load_synthetic_jsonl((fs::path(dir) / "synthetic.jsonl").string());
  CHECK(!samples.empty());
}

TEST_CASE("cmd_evaluate report has the metric keys") {
  RunConfig config;
  config.dataset_path = demo_csv();
  config.out_dir = (scratch_dir() / "eval_run").string();
  config.exp.aug.k = 8;
  config.exp.folds = 3;
  config.exp.spectrum_hyper = TreeHyper{20, 0.1, 3, 1.0};
  config.exp.downstream_hyper = TreeHyper{20, 0.1, 3, 1.0};
  fs::remove_all(config.out_dir);

  cmd_evaluate(config);
  const auto report =
      nlohmann::json::parse(slurp(fs::path(config.out_dir) / "report.json"));
  for (const char* key : {"sera", "mae", "rmse", "r2"}) {
    CHECK(report.at("baseline").contains(key));
    CHECK(report.at("smh").contains(key));
  }
  CHECK(report.at("folds").size() == 3);
  CHECK(report.at("config").at("folds").get<int>() == 3);
}

TEST_CASE("cmd_relevance_plot grid endpoints match the dataset range") {
  RunConfig config;
  config.dataset_path = demo_csv();
  config.out_dir = (scratch_dir() / "plot_run").string();
  config.emit_svg = true;
  config.plot_points = 101;
  fs::remove_all(config.out_dir);

  cmd_relevance_plot(config);
  const auto csv = slurp(fs::path(config.out_dir) / "relevance.csv");
  CHECK(csv.rfind("y,phi,density,weight\n", 0) == 0);

  // first data line carries phi = 1, the last carries phi = 0 and weight 0
  std::istringstream lines(csv);
  std::string line, first, last;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    if (first.empty()) first = line;
    if (!line.empty()) last = line;
  }
  auto fields = [](const std::string& row) {
    std::vector<std::string> out;
    std::istringstream ss(row);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
  };
  CHECK(fields(first).at(1) == "1");
  CHECK(fields(last).at(1) == "0");
  CHECK(fields(last).at(3) == "0");
  CHECK(fs::exists(fs::path(config.out_dir) / "plots" / "relevance.svg"));
}

TEST_CASE("relevance control points override the extremes construction") {
  const auto path = write_file("points.cfg",
                               "dataset = \"" + demo_csv() + "\"\n"
                               "relevance_points = [-9, 1, -2, 0.5, 2, 0]\n");
  const auto config = RunConfig::from_file(path);
  REQUIRE(config.relevance_points.size() == 3);
  const auto phi = config.exp.make_relevance({0.0, 1.0});  // targets unused
  CHECK(phi(-9.0) == 1.0);
  CHECK(phi(-2.0) == doctest::Approx(0.5));
  CHECK(phi(2.0) == 0.0);

  CHECK_THROWS_AS(
      RunConfig::from_kv(KeyValueFile::parse_text("relevance_points = [1, 2, 3]\n")),
      Error);
}

TEST_CASE("cmd_stats on identical files reports zero deltas") {
  RunConfig config;
  config.out_dir = (scratch_dir() / "stats_run").string();
  fs::remove_all(config.out_dir);
  cmd_stats(config, demo_csv(), demo_csv());

  const auto csv = slurp(fs::path(config.out_dir) / "stats.csv");
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const auto comma = line.rfind(',');
    CHECK(line.substr(comma + 1) == "0");
  }
}

TEST_CASE("cli binary: exit codes and determinism of artifacts") {
  const auto out_a = (scratch_dir() / "cli_a").string();
  const auto out_b = (scratch_dir() / "cli_b").string();
  fs::remove_all(out_a);
  fs::remove_all(out_b);

  const std::string base =
      "augment --dataset " + demo_csv() +
      " --k 8 --seed 42 --fraction 0.1 --threads 2";
  CHECK(run_cli(base + " --out " + out_a) == 0);
  CHECK(run_cli(base + " --out " + out_b) == 0);
  CHECK(slurp(fs::path(out_a) / "synthetic.jsonl") ==
        slurp(fs::path(out_b) / "synthetic.jsonl"));
  CHECK(slurp(fs::path(out_a) / "stats.csv") ==
        slurp(fs::path(out_b) / "stats.csv"));
  CHECK(slurp(fs::path(out_a) / "model.json") ==
        slurp(fs::path(out_b) / "model.json"));

  // missing file is a runtime failure: exit 1
  CHECK(run_cli("augment --dataset /no/such.csv") == 1);
  // out-of-range flag value is invalid arguments: exit 2
  CHECK(run_cli("augment --dataset " + demo_csv() + " --fraction 3.0") == 2);
  // unknown flag: exit 2
  CHECK(run_cli("augment --frobnicate") == 2);
  // folds below 2 rejected
  CHECK(run_cli("evaluate --dataset " + demo_csv() + " --folds 1") == 2);
  // stats with an unreadable synthetic file: exit 1
  CHECK(run_cli("stats " + demo_csv() + " /no/such.jsonl") == 1);
}

TEST_SUITE_END();
