// Copyright 2026 The sppf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <limits>
#include <tuple>
#include <vector>

#include "sppf/errors.hpp"
#include "sppf/pauli.hpp"
#include "sppf/topology.hpp"

namespace sppf {

// Pairwise interaction scores: S(i,j) counts the gadgets carrying non-I
// letters on both logical qubits i and j.
struct ScoreMatrix {
  size_t n = 0;
  std::vector<uint32_t> s;

  uint32_t operator()(size_t i, size_t j) const { return s[i * n + j]; }
};

inline ScoreMatrix score_pairs(const PauliExponential& e) {
  ScoreMatrix m;
  m.n = e.n_qubits;
  m.s.assign(e.n_qubits * e.n_qubits, 0);
  for (const PauliGadget& g : e.gadgets) {
    auto supp = g.support();
    for (size_t a = 0; a < supp.size(); ++a) {
      for (size_t b = a + 1; b < supp.size(); ++b) {
        ++m.s[supp[a] * e.n_qubits + supp[b]];
        ++m.s[supp[b] * e.n_qubits + supp[a]];
      }
    }
  }
  return m;
}

// Central physical qubit: among the maximum-degree vertices, the one with the
// longest minimum distance to any minimum-degree vertex (itself excluded).
// Ties break to the lowest index.
inline uint32_t find_root_physical(const CouplingGraph& g,
                                   const DistanceMatrix& d) {
  size_t max_deg = 0, min_deg = std::numeric_limits<size_t>::max();
  for (uint32_t v = 0; v < g.n_qubits; ++v) {
    max_deg = std::max(max_deg, g.degree(v));
    min_deg = std::min(min_deg, g.degree(v));
  }
  uint32_t best = 0;
  uint32_t best_score = 0;
  bool have = false;
  for (uint32_t v = 0; v < g.n_qubits; ++v) {
    if (g.degree(v) != max_deg) continue;
    uint32_t closest = std::numeric_limits<uint32_t>::max();
    for (uint32_t u = 0; u < g.n_qubits; ++u) {
      if (u == v || g.degree(u) != min_deg) continue;
      closest = std::min(closest, d(v, u));
    }
    if (closest == std::numeric_limits<uint32_t>::max()) closest = 0;
    if (!have || closest > best_score) {
      have = true;
      best = v;
      best_score = closest;
    }
  }
  return best;
}

// Logical qubit with the most non-I letters across all gadgets; ties break
// to the lowest index.
inline uint32_t find_root_logical(const PauliExponential& e) {
  std::vector<size_t> counts(e.n_qubits, 0);
  for (const PauliGadget& g : e.gadgets)
    for (size_t q = 0; q < e.n_qubits; ++q)
      if (g.string[q] != Pauli::I) ++counts[q];
  uint32_t best = 0;
  for (uint32_t q = 1; q < e.n_qubits; ++q)
    if (counts[q] > counts[best]) best = q;
  return best;
}

// Injective logical -> physical placement.
struct QubitMapping {
  std::vector<uint32_t> log_to_phys;
  std::vector<int32_t> phys_to_log;  // -1 where unmapped

  static QubitMapping trivial(size_t n_log, size_t n_phys) {
    if (n_log > n_phys)
      throw input_error("more logical than physical qubits");
    QubitMapping m;
    m.log_to_phys.resize(n_log);
    m.phys_to_log.assign(n_phys, -1);
    for (size_t i = 0; i < n_log; ++i) {
      m.log_to_phys[i] = static_cast<uint32_t>(i);
      m.phys_to_log[i] = static_cast<int32_t>(i);
    }
    return m;
  }

  void assign(uint32_t logical, uint32_t physical) {
    log_to_phys[logical] = physical;
    phys_to_log[physical] = static_cast<int32_t>(logical);
  }
};

// Spanning tree carved from the coupling graph. Unused physical qubits are
// simply absent; nodes are stored parent-before-child.
struct ConnectivityTree {
  static constexpr int32_t kAbsent = -2;

  uint32_t root = 0;
  std::vector<int32_t> parent;  // physical-indexed; -1 root, kAbsent outside
  std::vector<uint32_t> nodes;
  std::vector<std::vector<uint32_t>> children;

  static ConnectivityTree rooted(uint32_t n_phys, uint32_t root_qubit) {
    ConnectivityTree t;
    t.root = root_qubit;
    t.parent.assign(n_phys, kAbsent);
    t.children.assign(n_phys, {});
    t.parent[root_qubit] = -1;
    t.nodes.push_back(root_qubit);
    return t;
  }

  bool contains(uint32_t v) const { return parent[v] != kAbsent; }
  size_t size() const { return nodes.size(); }

  void add(uint32_t v, uint32_t parent_qubit) {
    if (contains(v)) throw internal_error("tree node added twice");
    if (!contains(parent_qubit))
      throw internal_error("tree parent not present");
    parent[v] = static_cast<int32_t>(parent_qubit);
    children[parent_qubit].push_back(v);
    nodes.push_back(v);
  }
};

// Full BFS spanning tree; used by the identity and random mapping modes.
inline ConnectivityTree bfs_tree(const CouplingGraph& g, uint32_t root) {
  ConnectivityTree t = ConnectivityTree::rooted(g.n_qubits, root);
  std::deque<uint32_t> queue{root};
  while (!queue.empty()) {
    uint32_t v = queue.front();
    queue.pop_front();
    for (uint32_t w : g.adj[v]) {
      if (!t.contains(w)) {
        t.add(w, v);
        queue.push_back(w);
      }
    }
  }
  return t;
}

struct MappingResult {
  QubitMapping mapping;
  ConnectivityTree tree;
};

// Steps 1-4 of the placement procedure: score logical pairs, root the tree at
// the central physical qubit, place the busiest logical qubit there, then
// grow the tree one frontier qubit at a time, always taking the candidate
// (logical, physical, mapped-neighbor) triple of maximum score. Ties break
// lexicographically; when every candidate scores zero the frontier qubit
// closest to the root wins.
inline MappingResult build_mapping(const PauliExponential& e,
                                   const CouplingGraph& g) {
  const size_t n_log = e.n_qubits;
  const uint32_t n_phys = g.n_qubits;
  if (n_log == 0) throw input_error("exponential has no qubits");
  if (n_log > n_phys)
    throw input_error("more logical qubits (" + std::to_string(n_log) +
                      ") than physical qubits (" + std::to_string(n_phys) + ")");

  ScoreMatrix scores = score_pairs(e);
  DistanceMatrix dist = all_pairs_distances(g);
  uint32_t root_phys = find_root_physical(g, dist);
  uint32_t root_log = find_root_logical(e);

  QubitMapping mapping;
  mapping.log_to_phys.assign(n_log, 0);
  mapping.phys_to_log.assign(n_phys, -1);
  std::vector<char> log_mapped(n_log, 0);
  mapping.assign(root_log, root_phys);
  log_mapped[root_log] = 1;
  ConnectivityTree tree = ConnectivityTree::rooted(n_phys, root_phys);

  for (size_t placed = 1; placed < n_log; ++placed) {
    bool have = false;
    uint32_t best_l = 0, best_q = 0, best_p = 0, best_score = 0;
    uint32_t best_root_dist = 0;
    for (uint32_t l = 0; l < n_log; ++l) {
      if (log_mapped[l]) continue;
      for (uint32_t q = 0; q < n_phys; ++q) {
        if (mapping.phys_to_log[q] != -1) continue;
        for (uint32_t p : g.neighbors(q)) {
          if (mapping.phys_to_log[p] == -1) continue;
          uint32_t score =
              scores(l, static_cast<size_t>(mapping.phys_to_log[p]));
          uint32_t root_dist = dist(root_phys, q);
          bool better;
          if (!have) {
            better = true;
          } else if (score != best_score) {
            better = score > best_score;
          } else if (best_score == 0 && root_dist != best_root_dist) {
            better = root_dist < best_root_dist;
          } else {
            better = std::tie(l, q, p) < std::tie(best_l, best_q, best_p);
          }
          if (better) {
            have = true;
            best_l = l;
            best_q = q;
            best_p = p;
            best_score = score;
            best_root_dist = root_dist;
          }
        }
      }
    }
    if (!have) throw internal_error("mapping frontier is empty");
    mapping.assign(best_l, best_q);
    log_mapped[best_l] = 1;
    tree.add(best_q, best_p);
  }
  return {std::move(mapping), std::move(tree)};
}

}  // namespace sppf
