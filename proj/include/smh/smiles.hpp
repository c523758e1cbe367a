//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_SMILES_HPP_
#define SMH_SMILES_HPP_

#include <string>

#include "smh/graph.hpp"

namespace smh {

/// Parse a SMILES string into its heavy-atom skeleton graph.
///
/// Supported syntax: organic-subset atoms (B, C, N, O, P, S, F, Cl, Br, I),
/// aromatic lowercase (b, c, n, o, p, s), bracket atoms with element symbol
/// (isotope and charge are folded into the node label, hydrogen counts are
/// dropped), branches, ring closures 1-9 and %nn, bond symbols (dash, =, #,
/// colon, and the stereo slashes; order ignored for topology), and the '.'
/// component separator, where the largest connected component is kept.
///
/// Throws ParseError with a byte offset for unbalanced parentheses, unclosed
/// ring bonds, and unknown tokens. If `warning` is non-null it receives a
/// note when components were discarded, else the note goes to stderr.
Graph parse_smiles(const std::string& s, std::string* warning = nullptr);

}  // namespace smh

#endif  // SMH_SMILES_HPP_
