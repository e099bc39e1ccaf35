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
#include <vector>

#include "sppf/circuit.hpp"
#include "sppf/errors.hpp"
#include "sppf/pauli.hpp"
#include "sppf/topology.hpp"

namespace sppf {

// Binary-symplectic tableau of a Clifford operator U. Row i < n holds the
// conjugation image U X_i U^dag, row n+i holds U Z_i U^dag, each as a sign
// bit plus one letter per qubit. Appending a gate conjugates every row in
// place (column updates); prepending rewrites the touched generator rows as
// products of existing rows.
struct CliffordTableau {
  uint32_t n = 0;
  std::vector<uint8_t> x, z;   // 2n rows of n columns, row-major
  std::vector<uint8_t> sign;   // 2n sign bits

  static CliffordTableau identity(uint32_t n_qubits) {
    if (n_qubits == 0) throw input_error("tableau needs at least one qubit");
    CliffordTableau t;
    t.n = n_qubits;
    t.x.assign(static_cast<size_t>(2) * n_qubits * n_qubits, 0);
    t.z.assign(static_cast<size_t>(2) * n_qubits * n_qubits, 0);
    t.sign.assign(static_cast<size_t>(2) * n_qubits, 0);
    for (uint32_t i = 0; i < n_qubits; ++i) {
      t.x[static_cast<size_t>(i) * n_qubits + i] = 1;
      t.z[(static_cast<size_t>(n_qubits) + i) * n_qubits + i] = 1;
    }
    return t;
  }

  Pauli letter_at(uint32_t row, uint32_t col) const {
    size_t idx = static_cast<size_t>(row) * n + col;
    return pauli_from_bits(x[idx], z[idx]);
  }

  void set_letter(uint32_t row, uint32_t col, Pauli p) {
    size_t idx = static_cast<size_t>(row) * n + col;
    x[idx] = x_bit(p) ? 1 : 0;
    z[idx] = z_bit(p) ? 1 : 0;
  }

  bool is_identity() const {
    for (uint32_t r = 0; r < 2 * n; ++r) {
      if (sign[r]) return false;
      for (uint32_t c = 0; c < n; ++c) {
        uint8_t wantx = (r < n && c == r) ? 1 : 0;
        uint8_t wantz = (r >= n && c + n == r) ? 1 : 0;
        if (x[static_cast<size_t>(r) * n + c] != wantx) return false;
        if (z[static_cast<size_t>(r) * n + c] != wantz) return false;
      }
    }
    return true;
  }

  // The rows must realize the Pauli commutation relations: X_i / Z_i images
  // anticommute pairwise, everything else commutes.
  bool is_symplectic() const {
    auto sym = [&](uint32_t r1, uint32_t r2) {
      int acc = 0;
      for (uint32_t c = 0; c < n; ++c) {
        acc ^= (x[static_cast<size_t>(r1) * n + c] &
                z[static_cast<size_t>(r2) * n + c]) ^
               (x[static_cast<size_t>(r2) * n + c] &
                z[static_cast<size_t>(r1) * n + c]);
      }
      return acc;
    };
    for (uint32_t r1 = 0; r1 < 2 * n; ++r1) {
      for (uint32_t r2 = r1 + 1; r2 < 2 * n; ++r2) {
        int want = (r2 == r1 + n) ? 1 : 0;
        if (sym(r1, r2) != want) return false;
      }
    }
    return true;
  }

  void append_gate(const Gate& g) {
    if (!is_clifford(g.kind))
      throw input_error("cannot append a non-Clifford gate to a tableau");
    if (g.q0 >= n || (g.kind == GateKind::Cnot && g.q1 >= n))
      throw input_error("tableau gate index out of range");
    for (uint32_t r = 0; r < 2 * n; ++r) {
      if (g.kind == GateKind::Cnot) {
        CnotConj res = conj_cnot(letter_at(r, g.q0), letter_at(r, g.q1));
        set_letter(r, g.q0, res.control);
        set_letter(r, g.q1, res.target);
        if (res.sign < 0) sign[r] ^= 1;
      } else {
        SingleConj res = heisenberg_single(g.kind, letter_at(r, g.q0));
        set_letter(r, g.q0, res.letter);
        if (res.sign < 0) sign[r] ^= 1;
      }
    }
  }

  struct RowVal {
    std::vector<uint8_t> x, z;
    uint8_t sign;
  };

  // Image of an arbitrary signed Pauli under this tableau's conjugation map,
  // computed as a phase-tracked product of generator-image rows.
  RowVal evaluate(const std::vector<uint8_t>& xin,
                  const std::vector<uint8_t>& zin, uint8_t sign_in) const {
    int e = 2 * sign_in;  // exponent of i in the X-Z normal form
    for (uint32_t k = 0; k < n; ++k) e += xin[k] & zin[k];
    e &= 3;
    std::vector<uint8_t> ax(n, 0), az(n, 0);
    auto mul_row = [&](uint32_t row) {
      size_t base = static_cast<size_t>(row) * n;
      int er = 2 * sign[row];
      int cross = 0;
      for (uint32_t k = 0; k < n; ++k) {
        er += x[base + k] & z[base + k];
        cross += az[k] & x[base + k];
        ax[k] ^= x[base + k];
        az[k] ^= z[base + k];
      }
      e = (e + er + 2 * cross) & 3;
    };
    for (uint32_t q = 0; q < n; ++q) {
      if (xin[q]) mul_row(q);
      if (zin[q]) mul_row(n + q);
    }
    int y_count = 0;
    for (uint32_t k = 0; k < n; ++k) y_count += ax[k] & az[k];
    int rem = (e - (y_count & 3) + 8) & 3;
    if (rem & 1) throw internal_error("tableau image has a complex phase");
    return {std::move(ax), std::move(az), static_cast<uint8_t>(rem == 2)};
  }

  void prepend_gate(const Gate& g) {
    if (!is_clifford(g.kind))
      throw input_error("cannot prepend a non-Clifford gate to a tableau");
    if (g.q0 >= n || (g.kind == GateKind::Cnot && g.q1 >= n))
      throw input_error("tableau gate index out of range");
    auto local = [&](uint32_t q, Pauli p, int s) {
      std::vector<uint8_t> xin(n, 0), zin(n, 0);
      xin[q] = x_bit(p) ? 1 : 0;
      zin[q] = z_bit(p) ? 1 : 0;
      return evaluate(xin, zin, s < 0 ? 1 : 0);
    };
    auto store = [&](uint32_t row, const RowVal& val) {
      size_t base = static_cast<size_t>(row) * n;
      for (uint32_t k = 0; k < n; ++k) {
        x[base + k] = val.x[k];
        z[base + k] = val.z[k];
      }
      sign[row] = val.sign;
    };
    if (g.kind == GateKind::Cnot) {
      uint32_t a = g.q0, b = g.q1;
      // CNOT images: X_a -> X_a X_b, Z_b -> Z_a Z_b; X_b and Z_a unchanged.
      std::vector<uint8_t> xin(n, 0), zin(n, 0);
      xin[a] = xin[b] = 1;
      RowVal xa = evaluate(xin, zin, 0);
      std::fill(xin.begin(), xin.end(), 0);
      zin[a] = zin[b] = 1;
      RowVal zb = evaluate(xin, zin, 0);
      store(a, xa);
      store(n + b, zb);
    } else {
      SingleConj ix = heisenberg_single(g.kind, Pauli::X);
      SingleConj iz = heisenberg_single(g.kind, Pauli::Z);
      RowVal rx = local(g.q0, ix.letter, ix.sign);
      RowVal rz = local(g.q0, iz.letter, iz.sign);
      store(g.q0, rx);
      store(n + g.q0, rz);
    }
  }

  bool operator==(const CliffordTableau& o) const {
    return n == o.n && x == o.x && z == o.z && sign == o.sign;
  }
};

inline CliffordTableau from_circuit(const Circuit& c) {
  if (c.n_qubits == 0) throw input_error("empty register");
  CliffordTableau t = CliffordTableau::identity(c.n_qubits);
  for (const Gate& g : c.gates) {
    if (!is_clifford(g.kind))
      throw input_error("circuit contains a non-Clifford gate");
    t.append_gate(g);
  }
  return t;
}

namespace detail {

// Lowest-index vertex whose removal keeps the active induced subgraph
// connected. Every connected graph has at least two such vertices.
inline uint32_t pick_noncut_vertex(const CouplingGraph& g,
                                   const std::vector<char>& active,
                                   uint32_t active_count) {
  for (uint32_t v = 0; v < g.n_qubits; ++v) {
    if (!active[v]) continue;
    if (active_count == 1) return v;
    uint32_t start = g.n_qubits;
    for (uint32_t w = 0; w < g.n_qubits; ++w) {
      if (active[w] && w != v) {
        start = w;
        break;
      }
    }
    std::vector<char> seen(g.n_qubits, 0);
    std::deque<uint32_t> queue{start};
    seen[start] = 1;
    uint32_t count = 1;
    while (!queue.empty()) {
      uint32_t u = queue.front();
      queue.pop_front();
      for (uint32_t w : g.adj[u]) {
        if (active[w] && w != v && !seen[w]) {
          seen[w] = 1;
          ++count;
          queue.push_back(w);
        }
      }
    }
    if (count == active_count - 1) return v;
  }
  throw internal_error("no removable vertex in connected subgraph");
}

}  // namespace detail

// Architecture-aware tableau synthesis. Eliminates one qubit per round by
// Gaussian elimination on the generator images, with all CNOTs routed along
// shortest paths inside the still-active induced subgraph; the elimination
// order only ever removes non-cut vertices so routing never leaves the
// active region. Returns a circuit c with from_circuit(c) == t (matrix and
// signs) and every CNOT on an edge of g.
inline Circuit synthesize(const CliffordTableau& t, const CouplingGraph& g) {
  if (g.n_qubits != t.n)
    throw input_error("tableau width does not match topology");
  if (!t.is_symplectic()) throw input_error("tableau is not symplectic");

  CliffordTableau work = t;
  std::vector<Gate> ops;
  auto emit = [&](const Gate& gate) {
    work.append_gate(gate);
    ops.push_back(gate);
  };

  auto row_support = [&](uint32_t row) {
    std::vector<uint32_t> supp;
    for (uint32_t c = 0; c < work.n; ++c)
      if (work.letter_at(row, c) != Pauli::I) supp.push_back(c);
    return supp;
  };

  std::vector<char> active(t.n, 1);
  uint32_t active_count = t.n;

  // Contracts the row's support into q. Builds the subtree of shortest
  // active paths from the support to q, gives every subtree node the letter
  // with one CNOT from a populated neighbor, then folds the leaves inward
  // with one CNOT per edge. x_mode handles an X-string (which spreads
  // control-to-target), z_mode a Z-string (target-to-control); in z_mode q
  // is only ever a CNOT target, which keeps the already-fixed X image of q
  // untouched.
  auto contract_row = [&](uint32_t row, uint32_t q, bool x_mode) {
    auto supp = row_support(row);
    if (supp.empty()) throw internal_error("tableau row lost its support");
    if (supp.size() == 1 && supp[0] == q) return;

    // BFS parents toward q inside the active region
    std::vector<int32_t> par(g.n_qubits, -2);
    {
      std::deque<uint32_t> queue{q};
      par[q] = -1;
      while (!queue.empty()) {
        uint32_t v = queue.front();
        queue.pop_front();
        for (uint32_t w : g.adj[v]) {
          if (active[w] && par[w] == -2) {
            par[w] = static_cast<int32_t>(v);
            queue.push_back(w);
          }
        }
      }
    }
    // union of support-to-q paths
    std::vector<char> in_sub(g.n_qubits, 0);
    in_sub[q] = 1;
    for (uint32_t p : supp) {
      uint32_t w = p;
      while (!in_sub[w]) {
        if (par[w] == -2)
          throw internal_error("support outside the active subgraph");
        in_sub[w] = 1;
        w = static_cast<uint32_t>(par[w]);
      }
    }
    // subtree nodes, parent before child
    std::vector<uint32_t> nodes{q};
    {
      std::vector<std::vector<uint32_t>> kids(g.n_qubits);
      for (uint32_t v = 0; v < g.n_qubits; ++v)
        if (in_sub[v] && par[v] >= 0)
          kids[static_cast<uint32_t>(par[v])].push_back(v);
      for (size_t i = 0; i < nodes.size(); ++i)
        for (uint32_t w : kids[nodes[i]]) nodes.push_back(w);
    }
    // populate every empty subtree node from a populated neighbor
    bool progress = true;
    while (progress) {
      progress = false;
      for (uint32_t v : nodes) {
        if (work.letter_at(row, v) != Pauli::I) continue;
        for (uint32_t w : g.adj[v]) {
          if (!in_sub[w] || work.letter_at(row, w) == Pauli::I) continue;
          emit(x_mode ? Gate::cnot(w, v) : Gate::cnot(v, w));
          progress = true;
          break;
        }
      }
    }
    // fold children into parents, deepest first
    for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
      uint32_t v = *it;
      if (v == q) continue;
      uint32_t parent = static_cast<uint32_t>(par[v]);
      emit(x_mode ? Gate::cnot(parent, v) : Gate::cnot(v, parent));
    }
  };

  for (uint32_t round = 0; round < t.n; ++round) {
    uint32_t q = detail::pick_noncut_vertex(g, active, active_count);

    // Make the X_q image equal +-X_q: all letters to X, then contract.
    for (uint32_t p : row_support(q)) {
      Pauli L = work.letter_at(q, p);
      if (L == Pauli::Z) {
        emit(Gate::v(p));
        emit(Gate::s(p));
      } else if (L == Pauli::Y) {
        emit(Gate::s(p));
      }
    }
    contract_row(q, q, /*x_mode=*/true);

    // Make the Z_q image equal +-Z_q without touching the X_q image.
    uint32_t zrow = work.n + q;
    Pauli at_q = work.letter_at(zrow, q);
    if (at_q != Pauli::Z && at_q != Pauli::Y)
      throw internal_error("Z image does not anticommute with fixed X image");
    if (at_q == Pauli::Y) emit(Gate::v(q));
    for (uint32_t p : row_support(zrow)) {
      if (p == q) continue;
      Pauli L = work.letter_at(zrow, p);
      if (L == Pauli::X) {
        emit(Gate::s(p));
        emit(Gate::v(p));
      } else if (L == Pauli::Y) {
        emit(Gate::v(p));
      }
    }
    contract_row(zrow, q, /*x_mode=*/false);

    active[q] = 0;
    --active_count;
  }

  // All rows are now +-basis rows; fix the signs with a single-qubit layer.
  for (uint32_t q = 0; q < t.n; ++q) {
    if (work.sign[work.n + q]) {  // X gate flips the Z_q image sign
      emit(Gate::v(q));
      emit(Gate::v(q));
    }
    if (work.sign[q]) {  // Z gate flips the X_q image sign
      emit(Gate::s(q));
      emit(Gate::s(q));
    }
  }
  if (!work.is_identity())
    throw internal_error("tableau elimination did not reach the identity");

  // ops realize the inverse operator; the adjoint realizes t exactly.
  Circuit out(t.n);
  out.gates.reserve(ops.size());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    out.gates.push_back(it->adjoint());
  return out;
}

}  // namespace sppf
