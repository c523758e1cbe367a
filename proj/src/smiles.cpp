//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "smh/smiles.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <iostream>
#include <numeric>
#include <utility>
#include <vector>

#include "smh/error.hpp"

namespace smh {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool aromatic_organic(char c) {
  return c == 'b' || c == 'c' || c == 'n' || c == 'o' || c == 'p' || c == 's';
}

struct ParserState {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, std::size_t>> branch_stack;  // atom, '(' offset
  std::array<int, 100> ring_atom;
  std::array<std::size_t, 100> ring_offset;
  int prev_atom = -1;
  bool pending_bond = false;
  std::size_t pending_bond_at = 0;

  ParserState() {
    ring_atom.fill(-1);
    ring_offset.fill(0);
  }

  int add_atom(std::string label) {
    labels.push_back(std::move(label));
    const int idx = static_cast<int>(labels.size()) - 1;
    if (prev_atom >= 0) edges.emplace_back(prev_atom, idx);
    prev_atom = idx;
    pending_bond = false;
    return idx;
  }

  void skip_atom() {
    // Hydrogen from a bracket token: no node, the bond slot is consumed.
    pending_bond = false;
  }

  void close_or_open_ring(int number, std::size_t at) {
    if (prev_atom < 0) throw ParseError("ring bond before any atom", at);
    pending_bond = false;
    if (ring_atom[number] < 0) {
      ring_atom[number] = prev_atom;
      ring_offset[number] = at;
      return;
    }
    if (ring_atom[number] == prev_atom) {
      throw ParseError("ring closure forms a self-loop", at);
    }
    edges.emplace_back(ring_atom[number], prev_atom);
    ring_atom[number] = -1;
  }
};

// Bracket atom: [isotope? symbol chirality? Hcount? charge? :map?]
// Returns the node label, or an empty string for hydrogen.
std::string parse_bracket(const std::string& s, std::size_t& i) {
  const std::size_t open = i;
  ++i;  // consume '['
  std::string isotope;
  while (i < s.size() && is_digit(s[i])) isotope.push_back(s[i++]);
  if (i >= s.size()) throw ParseError("unterminated bracket atom", open);

  std::string element;
  if (std::isupper(static_cast<unsigned char>(s[i]))) {
    element.push_back(s[i++]);
    if (i < s.size() && std::islower(static_cast<unsigned char>(s[i]))) {
      element.push_back(s[i++]);
    }
  } else if (i + 1 < s.size() &&
             (s.compare(i, 2, "se") == 0 || s.compare(i, 2, "as") == 0)) {
    element.push_back(static_cast<char>(std::toupper(s[i])));
    element.push_back(s[i + 1]);
    i += 2;
  } else if (aromatic_organic(s[i])) {
    element.push_back(static_cast<char>(std::toupper(s[i])));
    ++i;
  } else {
    throw ParseError("expected element symbol in bracket atom", i);
  }

  int charge = 0;
  while (i < s.size() && s[i] != ']') {
    const char c = s[i];
    if (c == '@') {
      ++i;  // chirality, skipped
    } else if (c == 'H') {
      ++i;
      while (i < s.size() && is_digit(s[i])) ++i;  // implicit H count, dropped
    } else if (c == '+' || c == '-') {
      const int sign = (c == '+') ? 1 : -1;
      ++i;
      if (i < s.size() && is_digit(s[i])) {
        int mag = 0;
        while (i < s.size() && is_digit(s[i])) mag = mag * 10 + (s[i++] - '0');
        charge += sign * mag;
      } else {
        charge += sign;
        while (i < s.size() && s[i] == c) {  // ++ / -- style
          charge += sign;
          ++i;
        }
      }
    } else if (c == ':') {
      ++i;
      if (i >= s.size() || !is_digit(s[i])) {
        throw ParseError("atom map expects digits", i);
      }
      while (i < s.size() && is_digit(s[i])) ++i;
    } else {
      throw ParseError(std::string("unknown bracket token '") + c + "'", i);
    }
  }
  if (i >= s.size()) throw ParseError("unterminated bracket atom", open);
  ++i;  // consume ']'

  if (element == "H") return "";

  std::string label = isotope + element;
  if (charge > 0) label += (charge == 1) ? "+" : "+" + std::to_string(charge);
  if (charge < 0) label += (charge == -1) ? "-" : "-" + std::to_string(-charge);
  return label;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Graph parse_smiles(const std::string& input, std::string* warning) {
  std::size_t begin = input.find_first_not_of(" \t\r\n");
  std::size_t end = input.find_last_not_of(" \t\r\n");
  if (begin == std::string::npos) throw ParseError("empty SMILES", 0);
  const std::string s = input.substr(begin, end - begin + 1);

  ParserState st;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == '[') {
      std::string label = parse_bracket(s, i);
      if (label.empty()) {
        st.skip_atom();
      } else {
        st.add_atom(std::move(label));
      }
    } else if (c == 'C' || c == 'B') {
      // two-character organic symbols take precedence
      if (c == 'C' && i + 1 < s.size() && s[i + 1] == 'l') {
        st.add_atom("Cl");
        i += 2;
      } else if (c == 'B' && i + 1 < s.size() && s[i + 1] == 'r') {
        st.add_atom("Br");
        i += 2;
      } else {
        st.add_atom(std::string(1, c));
        ++i;
      }
    } else if (c == 'N' || c == 'O' || c == 'P' || c == 'S' || c == 'F' ||
               c == 'I') {
      st.add_atom(std::string(1, c));
      ++i;
    } else if (aromatic_organic(c)) {
      st.add_atom(std::string(1, static_cast<char>(std::toupper(c))));
      ++i;
    } else if (c == '-' || c == '=' || c == '#' || c == ':' || c == '/' ||
               c == '\\') {
      // bond order and stereo slashes carry no topological information
      if (st.prev_atom < 0) throw ParseError("bond symbol before any atom", i);
      st.pending_bond = true;
      st.pending_bond_at = i;
      ++i;
    } else if (is_digit(c)) {
      st.close_or_open_ring(c - '0', i);
      ++i;
    } else if (c == '%') {
      if (i + 2 >= s.size() || !is_digit(s[i + 1]) || !is_digit(s[i + 2])) {
        throw ParseError("%% ring closure expects two digits", i);
      }
      st.close_or_open_ring((s[i + 1] - '0') * 10 + (s[i + 2] - '0'), i);
      i += 3;
    } else if (c == '(') {
      if (st.prev_atom < 0) throw ParseError("branch before any atom", i);
      st.branch_stack.emplace_back(st.prev_atom, i);
      ++i;
    } else if (c == ')') {
      if (st.branch_stack.empty()) {
        throw ParseError("unbalanced ')'", i);
      }
      st.prev_atom = st.branch_stack.back().first;
      st.branch_stack.pop_back();
      st.pending_bond = false;
      ++i;
    } else if (c == '.') {
      st.prev_atom = -1;
      st.pending_bond = false;
      ++i;
    } else if (c == '@') {
      ++i;  // stray stereo marker, skipped
    } else {
      throw ParseError(std::string("unknown token '") + c + "'", i);
    }
  }

  if (!st.branch_stack.empty()) {
    throw ParseError("unbalanced '('", st.branch_stack.back().second);
  }
  for (int r = 0; r < 100; ++r) {
    if (st.ring_atom[r] >= 0) {
      throw ParseError("unclosed ring bond " + std::to_string(r),
                       st.ring_offset[r]);
    }
  }
  if (st.pending_bond) {
    throw ParseError("dangling bond symbol", st.pending_bond_at);
  }
  if (st.labels.empty()) throw ParseError("no heavy atoms", 0);

  const int n = static_cast<int>(st.labels.size());
  Dsu dsu(n);
  for (const auto& [a, b] : st.edges) dsu.unite(a, b);
  std::vector<int> comp_size(n, 0);
  for (int v = 0; v < n; ++v) ++comp_size[dsu.find(v)];
  int root = dsu.find(0);
  for (int v = 0; v < n; ++v) {
    const int r = dsu.find(v);
    if (comp_size[r] > comp_size[root]) root = r;  // first largest wins ties
  }

  int components = 0;
  for (int v = 0; v < n; ++v) {
    if (dsu.find(v) == v) ++components;
  }
  if (components > 1) {
    const std::string note = "kept largest of " + std::to_string(components) +
                             " components in '" + s + "'";
    if (warning) {
      *warning = note;
    } else {
      std::cerr << "[smh] warning: " << note << "\n";
    }
    std::vector<int> remap(n, -1);
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) {
      if (dsu.find(v) == root) {
        remap[v] = static_cast<int>(labels.size());
        labels.push_back(st.labels[v]);
      }
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : st.edges) {
      if (remap[a] >= 0 && remap[b] >= 0) edges.emplace_back(remap[a], remap[b]);
    }
    const int kept = static_cast<int>(labels.size());
    return Graph(kept, std::move(edges), std::move(labels));
  }

  return Graph(n, std::move(st.edges), std::move(st.labels));
}

}  // namespace smh
