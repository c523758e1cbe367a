//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "smh/datagen.hpp"
#include "smh/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"deterministic demo corpus generator"};

  std::string out = "demo_molecules.csv";
  smh::MoleculeCorpusOptions options;
  app.add_option("--out", out, "output CSV path");
  app.add_option("--count", options.count, "number of molecules");
  app.add_option("--seed", options.seed, "generator seed");
  app.add_option("--min-atoms", options.min_atoms, "smallest molecule");
  app.add_option("--max-atoms", options.max_atoms, "largest molecule");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return (code == 0) ? 0 : 2;
  }

  try {
    smh::write_molecule_csv(out, options);
  } catch (const smh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << "wrote " << options.count << " molecules to " << out << "\n";
  return 0;
}
