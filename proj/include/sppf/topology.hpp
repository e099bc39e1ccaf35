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

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sppf/device_data.hpp"
#include "sppf/errors.hpp"

namespace sppf {

// Undirected hardware coupling graph. CNOTs may only act on its edges; the
// CNOT direction is free because of the surrounding single-qubit gates.
struct CouplingGraph {
  uint32_t n_qubits = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges;  // normalized u < v, sorted
  std::vector<std::vector<uint32_t>> adj;            // sorted neighbor lists

  bool has_edge(uint32_t u, uint32_t v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
  }

  size_t degree(uint32_t v) const { return adj[v].size(); }

  const std::vector<uint32_t>& neighbors(uint32_t v) const { return adj[v]; }
};

namespace detail {

inline bool graph_connected(const CouplingGraph& g) {
  if (g.n_qubits == 0) return false;
  std::vector<char> seen(g.n_qubits, 0);
  std::deque<uint32_t> queue{0};
  seen[0] = 1;
  size_t count = 1;
  while (!queue.empty()) {
    uint32_t v = queue.front();
    queue.pop_front();
    for (uint32_t w : g.adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count == g.n_qubits;
}

}  // namespace detail

inline CouplingGraph make_graph(uint32_t n,
                                std::vector<std::pair<uint32_t, uint32_t>> edges) {
  if (n == 0) throw input_error("topology must have at least one qubit");
  CouplingGraph g;
  g.n_qubits = n;
  for (auto& [u, v] : edges) {
    if (u == v)
      throw input_error("self-loop on qubit " + std::to_string(u));
    if (u >= n || v >= n)
      throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") out of range for " + std::to_string(n) + " qubits");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw input_error("duplicate edge in topology");
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  if (!detail::graph_connected(g))
    throw input_error("topology is not connected");
  return g;
}

// Format: first non-comment line is the qubit count, every further line is an
// edge "u v". '#' starts a comment.
inline CouplingGraph parse_edge_list(std::string_view text) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  bool have_n = false;
  uint32_t n = 0;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    unsigned long a = 0, b = 0;
    int matched = std::sscanf(line.c_str(), "%lu %lu", &a, &b);
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      if (!have_n) {
        if (matched != 1)
          throw input_error("line " + std::to_string(line_no) +
                            ": expected qubit count");
        n = static_cast<uint32_t>(a);
        have_n = true;
      } else {
        if (matched != 2)
          throw input_error("line " + std::to_string(line_no) +
                            ": expected edge 'u v'");
        edges.emplace_back(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
      }
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  if (!have_n) throw input_error("edge list is empty");
  return make_graph(n, std::move(edges));
}

inline CouplingGraph line_topology(uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_graph(n, std::move(edges));
}

inline CouplingGraph grid_topology(uint32_t rows, uint32_t cols) {
  if (rows == 0 || cols == 0) throw input_error("grid dimensions must be >= 1");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t r = 0; r < rows; ++r) {
    for (uint32_t c = 0; c < cols; ++c) {
      uint32_t v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return make_graph(rows * cols, std::move(edges));
}

inline CouplingGraph complete_topology(uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return make_graph(n, std::move(edges));
}

// Grammar: "line:<N>", "grid:<R>x<C>", "complete:<N>", or a lowercase device
// name (quito, nairobi, guadalupe, mumbai, brisbane).
inline CouplingGraph builtin_topology(std::string_view name) {
  auto parse_count = [&](std::string_view s) -> uint32_t {
    if (s.empty()) throw input_error("malformed size in topology name");
    uint64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9')
        throw input_error("malformed size '" + std::string(s) + "'");
      v = v * 10 + static_cast<uint64_t>(c - '0');
      if (v > std::numeric_limits<uint32_t>::max())
        throw input_error("topology size too large");
    }
    if (v == 0) throw input_error("topology size must be >= 1");
    return static_cast<uint32_t>(v);
  };
  if (name.rfind("line:", 0) == 0) return line_topology(parse_count(name.substr(5)));
  if (name.rfind("complete:", 0) == 0)
    return complete_topology(parse_count(name.substr(9)));
  if (name.rfind("grid:", 0) == 0) {
    std::string_view dims = name.substr(5);
    size_t x = dims.find('x');
    if (x == std::string_view::npos)
      throw input_error("grid topology expects 'grid:<R>x<C>'");
    return grid_topology(parse_count(dims.substr(0, x)),
                         parse_count(dims.substr(x + 1)));
  }
  if (name == "quito") return parse_edge_list(device_data::kQuito);
  if (name == "nairobi") return parse_edge_list(device_data::kNairobi);
  if (name == "guadalupe") return parse_edge_list(device_data::kGuadalupe);
  if (name == "mumbai") return parse_edge_list(device_data::kMumbai);
  if (name == "brisbane") return parse_edge_list(device_data::kBrisbane);
  throw input_error("unknown topology '" + std::string(name) + "'");
}

// All-pairs hop counts.
struct DistanceMatrix {
  uint32_t n = 0;
  std::vector<uint32_t> d;

  uint32_t operator()(uint32_t u, uint32_t v) const { return d[u * n + v]; }
};

inline std::vector<uint32_t> bfs_distances(const CouplingGraph& g,
                                           uint32_t source) {
  constexpr uint32_t kInf = std::numeric_limits<uint32_t>::max();
  std::vector<uint32_t> dist(g.n_qubits, kInf);
  std::deque<uint32_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    uint32_t v = queue.front();
    queue.pop_front();
    for (uint32_t w : g.adj[v]) {
      if (dist[w] == kInf) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline DistanceMatrix all_pairs_distances(const CouplingGraph& g) {
  DistanceMatrix m;
  m.n = g.n_qubits;
  m.d.resize(static_cast<size_t>(g.n_qubits) * g.n_qubits);
  for (uint32_t s = 0; s < g.n_qubits; ++s) {
    auto dist = bfs_distances(g, s);
    for (uint32_t t = 0; t < g.n_qubits; ++t) {
      if (dist[t] == std::numeric_limits<uint32_t>::max())
        throw input_error("topology is not connected");
      m.d[static_cast<size_t>(s) * g.n_qubits + t] = dist[t];
    }
  }
  return m;
}

// BFS spanning-tree parents; -1 marks the root. Neighbor order makes this
// deterministic.
inline std::vector<int32_t> bfs_parents(const CouplingGraph& g, uint32_t root) {
  std::vector<int32_t> parent(g.n_qubits, -2);
  std::deque<uint32_t> queue{root};
  parent[root] = -1;
  while (!queue.empty()) {
    uint32_t v = queue.front();
    queue.pop_front();
    for (uint32_t w : g.adj[v]) {
      if (parent[w] == -2) {
        parent[w] = static_cast<int32_t>(v);
        queue.push_back(w);
      }
    }
  }
  return parent;
}

}  // namespace sppf
