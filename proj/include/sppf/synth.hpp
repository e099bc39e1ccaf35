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

// Greedy architecture-aware synthesis of Pauli exponentials. Every gadget is
// tracked as the minimal subtree of the connectivity tree spanning its non-I
// qubits; its distance is the CNOT cost of contracting that subtree to one
// node (tree edges plus one extra CNOT per interior identity "bridge" node).
// The engine repeatedly takes the nearest gadget and clears one leaf per
// step, choosing among nine single-qubit/CNOT gate combinations the one that
// shrinks the remaining gadgets the most on average. Cleared Cliffords
// accumulate, mirrored, in a trailing tableau that is synthesized once at
// the end.

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sppf/circuit.hpp"
#include "sppf/errors.hpp"
#include "sppf/mapper.hpp"
#include "sppf/pauli.hpp"
#include "sppf/tableau.hpp"
#include "sppf/topology.hpp"

namespace sppf {

enum class MappingMode : uint8_t { Sppf, Random, Identity };

inline const char* mapping_mode_name(MappingMode m) {
  switch (m) {
    case MappingMode::Sppf: return "sppf";
    case MappingMode::Random: return "random";
    case MappingMode::Identity: return "identity";
  }
  return "?";
}

// Per-gadget subtree of the connectivity tree. After pruning every leaf
// carries a non-I letter; interior nodes may carry I (bridge qubits).
struct GadgetTree {
  std::vector<uint32_t> nodes;  // parent-before-child order
  std::vector<std::pair<uint32_t, uint32_t>> edges;  // (parent, child)
  std::vector<uint32_t> leaves;
  std::vector<Pauli> letters;   // aligned with nodes
  size_t identity_nodes = 0;

  bool empty() const { return nodes.empty(); }
};

namespace detail {

struct SubtreeCount {
  uint32_t nodes = 0;
  uint32_t identity_nodes = 0;
};

// Node/bridge counts of the minimal subtree of `tree` spanning the non-I
// positions of `letters`; nullopt when the gadget has no support.
inline std::optional<SubtreeCount> spanning_counts(
    const ConnectivityTree& tree, const std::vector<Pauli>& letters,
    std::vector<uint32_t>& cover_scratch) {
  auto& cover = cover_scratch;
  cover.assign(letters.size(), 0);
  for (auto it = tree.nodes.rbegin(); it != tree.nodes.rend(); ++it) {
    uint32_t v = *it;
    uint32_t c = letters[v] != Pauli::I ? 1 : 0;
    for (uint32_t w : tree.children[v]) c += cover[w];
    cover[v] = c;
  }
  uint32_t total = cover[tree.root];
  if (total == 0) return std::nullopt;

  uint32_t top = tree.root;
  while (letters[top] == Pauli::I) {
    uint32_t next = top;
    for (uint32_t w : tree.children[top]) {
      if (cover[w] == total) {
        next = w;
        break;
      }
    }
    if (next == top) break;
    top = next;
  }

  SubtreeCount out;
  std::vector<uint32_t> stack{top};
  while (!stack.empty()) {
    uint32_t v = stack.back();
    stack.pop_back();
    ++out.nodes;
    if (letters[v] == Pauli::I) ++out.identity_nodes;
    for (uint32_t w : tree.children[v])
      if (cover[w] > 0) stack.push_back(w);
  }
  return out;
}

}  // namespace detail

// Minimal subtree of the connectivity tree spanning the physically placed
// non-I letters of a gadget.
inline GadgetTree prune_physical(const ConnectivityTree& tree,
                                 const std::vector<Pauli>& letters) {
  GadgetTree out;
  std::vector<uint32_t> cover;
  auto counts = detail::spanning_counts(tree, letters, cover);
  if (!counts) return out;
  uint32_t total = cover[tree.root];
  uint32_t top = tree.root;
  while (letters[top] == Pauli::I) {
    uint32_t next = top;
    for (uint32_t w : tree.children[top]) {
      if (cover[w] == total) {
        next = w;
        break;
      }
    }
    if (next == top) break;
    top = next;
  }
  std::vector<uint32_t> degree(letters.size(), 0);
  std::vector<uint32_t> stack{top};
  while (!stack.empty()) {
    uint32_t v = stack.back();
    stack.pop_back();
    out.nodes.push_back(v);
    out.letters.push_back(letters[v]);
    if (letters[v] == Pauli::I) ++out.identity_nodes;
    for (uint32_t w : tree.children[v]) {
      if (cover[w] > 0) {
        out.edges.emplace_back(v, w);
        ++degree[v];
        ++degree[w];
        stack.push_back(w);
      }
    }
  }
  for (uint32_t v : out.nodes)
    if (out.nodes.size() == 1 || degree[v] == 1) out.leaves.push_back(v);
  return out;
}

// Logical-gadget variant: places the letters through the mapping first.
inline GadgetTree prune_tree(const ConnectivityTree& tree, const PauliGadget& g,
                             const QubitMapping& f) {
  std::vector<Pauli> letters(tree.parent.size(), Pauli::I);
  for (size_t l = 0; l < g.string.size(); ++l) {
    if (g.string[l] == Pauli::I) continue;
    uint32_t phys = f.log_to_phys[l];
    if (!tree.contains(phys))
      throw input_error("gadget qubit is not mapped into the tree");
    letters[phys] = g.string[l];
  }
  return prune_physical(tree, letters);
}

// Minimum CNOTs to contract the gadget to a single node: tree edges plus one
// bridge activation per interior identity node.
inline int gadget_distance(const GadgetTree& t) {
  if (t.empty())
    throw input_error("distance of an identity gadget is undefined");
  return static_cast<int>(t.nodes.size()) - 1 +
         static_cast<int>(t.identity_nodes);
}

// The step gate alphabet: control qubit gets I, V or SV, target qubit V, S
// or VS, followed by CNOT(control, target). "SV" appends S then V; "VS"
// appends V then S. These nine cover every useful letter rewrite on the
// pair; the CNOT direction is immaterial given the surrounding gates.
struct GateCombo {
  enum class Control : uint8_t { None, V, SV };
  enum class Target : uint8_t { V, S, VS };
  Control control;
  Target target;
};

inline constexpr std::array<GateCombo, 9> kGateCombos = {{
    {GateCombo::Control::None, GateCombo::Target::V},
    {GateCombo::Control::None, GateCombo::Target::S},
    {GateCombo::Control::None, GateCombo::Target::VS},
    {GateCombo::Control::V, GateCombo::Target::V},
    {GateCombo::Control::V, GateCombo::Target::S},
    {GateCombo::Control::V, GateCombo::Target::VS},
    {GateCombo::Control::SV, GateCombo::Target::V},
    {GateCombo::Control::SV, GateCombo::Target::S},
    {GateCombo::Control::SV, GateCombo::Target::VS},
}};

inline std::vector<Gate> combo_gates(const GateCombo& combo, uint32_t q_c,
                                     uint32_t q_t) {
  std::vector<Gate> gates;
  switch (combo.control) {
    case GateCombo::Control::None: break;
    case GateCombo::Control::V: gates.push_back(Gate::v(q_c)); break;
    case GateCombo::Control::SV:
      gates.push_back(Gate::s(q_c));
      gates.push_back(Gate::v(q_c));
      break;
  }
  switch (combo.target) {
    case GateCombo::Target::V: gates.push_back(Gate::v(q_t)); break;
    case GateCombo::Target::S: gates.push_back(Gate::s(q_t)); break;
    case GateCombo::Target::VS:
      gates.push_back(Gate::v(q_t));
      gates.push_back(Gate::s(q_t));
      break;
  }
  gates.push_back(Gate::cnot(q_c, q_t));
  return gates;
}

struct PairImage {
  Pauli control;
  Pauli target;
  int sign;
};

// What the letter pair at (control, target) becomes once the combo's gates
// are appended in front of the gadget.
inline PairImage combo_image(const GateCombo& combo, Pauli lc, Pauli lt) {
  int sign = 1;
  auto hit = [&](GateKind k, Pauli p) {
    SingleConj r = heisenberg_single(k, p);
    sign *= r.sign;
    return r.letter;
  };
  switch (combo.control) {
    case GateCombo::Control::None: break;
    case GateCombo::Control::V: lc = hit(GateKind::V, lc); break;
    case GateCombo::Control::SV:
      lc = hit(GateKind::S, lc);
      lc = hit(GateKind::V, lc);
      break;
  }
  switch (combo.target) {
    case GateCombo::Target::V: lt = hit(GateKind::V, lt); break;
    case GateCombo::Target::S: lt = hit(GateKind::S, lt); break;
    case GateCombo::Target::VS:
      lt = hit(GateKind::V, lt);
      lt = hit(GateKind::S, lt);
      break;
  }
  CnotConj r = conj_cnot(lc, lt);
  return {r.control, r.target, sign * r.sign};
}

// One decomposition step: either clears the leaf q_c into its non-I tree
// neighbor q_t, or activates the bridge qubit q_t.
struct SynthStep {
  uint32_t q_c = 0;
  uint32_t q_t = 0;
  uint32_t combo = 0;  // index into kGateCombos
};

struct SynthGadget {
  std::vector<Pauli> letters;  // physical placement, width n_phys
  double angle = 0.0;
  size_t original_index = 0;
  int distance = 0;
};

struct SynthState {
  const CouplingGraph* graph = nullptr;
  QubitMapping mapping;
  ConnectivityTree tree;
  std::vector<SynthGadget> remaining;
  Circuit prefix;
  CliffordTableau trailing;
  std::vector<size_t> processed_order;
  std::vector<std::string> notes;

  mutable std::vector<uint32_t> cover_scratch;
  mutable std::vector<Pauli> letters_scratch;

  int distance_of(const SynthGadget& g) const {
    auto counts = detail::spanning_counts(tree, g.letters, cover_scratch);
    if (!counts) return -1;
    return static_cast<int>(counts->nodes) - 1 +
           static_cast<int>(counts->identity_nodes);
  }

  // Distance the gadget would have with two letters swapped out.
  int distance_with_override(const SynthGadget& g, uint32_t qa, Pauli la,
                             uint32_t qb, Pauli lb) const {
    letters_scratch = g.letters;
    letters_scratch[qa] = la;
    letters_scratch[qb] = lb;
    auto counts = detail::spanning_counts(tree, letters_scratch, cover_scratch);
    if (!counts) return -1;
    return static_cast<int>(counts->nodes) - 1 +
           static_cast<int>(counts->identity_nodes);
  }
};

struct SynthStats {
  size_t cnot_count = 0;
  size_t cnot_depth = 0;
  size_t total_gates = 0;
  size_t synthesis_cnots = 0;  // decomposition-phase CNOTs (before tableau)
  size_t tableau_cnots = 0;
  double runtime_ms = 0.0;
};

struct SynthOptions {
  MappingMode mode = MappingMode::Sppf;
  uint64_t seed = 0;
  bool allow_reorder = false;  // accept non-commuting gadget sets
};

struct SynthResult {
  Circuit circuit;
  QubitMapping mapping;
  ConnectivityTree tree;
  std::vector<size_t> processed_order;
  bool commuting = true;
  std::vector<std::string> notes;
  SynthStats stats;
};

namespace detail {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace detail

// Appends one Clifford gate to the prefix, mirrors its adjoint into the
// trailing tableau and commutes it through every remaining gadget. Returns
// the gadgets whose support toggled (their cached distances are stale).
inline std::vector<size_t> append_clifford(SynthState& state, const Gate& g) {
  state.prefix.append(g);
  state.trailing.prepend_gate(g.adjoint());
  std::vector<size_t> toggled;
  for (size_t i = 0; i < state.remaining.size(); ++i) {
    SynthGadget& gad = state.remaining[i];
    int sign = 1;
    bool toggle = false;
    if (g.kind == GateKind::Cnot) {
      Pauli lc = gad.letters[g.q0], lt = gad.letters[g.q1];
      if (lc == Pauli::I && lt == Pauli::I) continue;
      CnotConj r = conj_cnot(lc, lt);
      toggle = (r.control == Pauli::I) != (lc == Pauli::I) ||
               (r.target == Pauli::I) != (lt == Pauli::I);
      gad.letters[g.q0] = r.control;
      gad.letters[g.q1] = r.target;
      sign = r.sign;
    } else {
      Pauli l = gad.letters[g.q0];
      if (l == Pauli::I) continue;
      SingleConj r = heisenberg_single(g.kind, l);
      gad.letters[g.q0] = r.letter;
      sign = r.sign;
    }
    if (sign < 0) gad.angle = -gad.angle;
    if (toggle) toggled.push_back(i);
  }
  return toggled;
}

// Index of the nearest remaining gadget; ties go to the lowest input index.
inline size_t select_next_gadget(const SynthState& state) {
  if (state.remaining.empty())
    throw internal_error("no gadgets left to select");
  size_t best = 0;
  for (size_t i = 1; i < state.remaining.size(); ++i) {
    const SynthGadget& a = state.remaining[i];
    const SynthGadget& b = state.remaining[best];
    if (a.distance < b.distance ||
        (a.distance == b.distance && a.original_index < b.original_index))
      best = i;
  }
  return best;
}

// All candidate steps for the selected gadget: for every leaf q_c of its
// subtree and tree neighbor q_t, the combos that clear q_c (when q_t holds a
// letter) or the bridge activations that make q_t non-I (when it does not).
inline std::vector<SynthStep> enumerate_steps(const SynthState& state,
                                              size_t gadget_idx) {
  const SynthGadget& gad = state.remaining[gadget_idx];
  GadgetTree gt = prune_physical(state.tree, gad.letters);
  if (gt.empty() || gadget_distance(gt) < 1)
    throw internal_error("enumerate_steps needs a contractible gadget");

  std::vector<uint32_t> leaves = gt.leaves;
  std::sort(leaves.begin(), leaves.end());
  std::vector<SynthStep> steps;
  for (uint32_t q_c : leaves) {
    // unique subtree neighbor of the leaf
    uint32_t q_t = q_c;
    for (auto [a, b] : gt.edges) {
      if (a == q_c) q_t = b;
      if (b == q_c) q_t = a;
    }
    if (q_t == q_c) throw internal_error("leaf without a tree neighbor");
    Pauli lc = gad.letters[q_c];
    Pauli lt = gad.letters[q_t];
    for (uint32_t k = 0; k < kGateCombos.size(); ++k) {
      PairImage img = combo_image(kGateCombos[k], lc, lt);
      bool useful = lt != Pauli::I ? img.control == Pauli::I
                                   : img.target != Pauli::I;
      if (useful) steps.push_back({q_c, q_t, k});
    }
  }
  return steps;
}

// Mean change of gadget distance across all remaining gadgets if the step
// were applied; lower is better. The divisor is shared by every candidate,
// so comparisons stay exact.
inline double score_step(const SynthState& state, const SynthStep& step) {
  const GateCombo& combo = kGateCombos[step.combo];
  long long sum = 0;
  for (const SynthGadget& gad : state.remaining) {
    Pauli lc = gad.letters[step.q_c];
    Pauli lt = gad.letters[step.q_t];
    if (lc == Pauli::I && lt == Pauli::I) continue;
    PairImage img = combo_image(combo, lc, lt);
    bool toggle = (img.control == Pauli::I) != (lc == Pauli::I) ||
                  (img.target == Pauli::I) != (lt == Pauli::I);
    if (!toggle) continue;  // same support, same tree, same distance
    int after = state.distance_with_override(gad, step.q_c, img.control,
                                             step.q_t, img.target);
    sum += (after < 0 ? 0 : after) - gad.distance;
  }
  return static_cast<double>(sum) /
         static_cast<double>(state.remaining.size());
}

// Applies the step: combo gates enter the prefix, their adjoints the
// trailing tableau, and every remaining gadget is conjugated. The selected
// gadget's distance drops by exactly one.
inline void apply_step(SynthState& state, size_t gadget_idx,
                       const SynthStep& step) {
  int before = state.remaining[gadget_idx].distance;
  std::vector<char> stale(state.remaining.size(), 0);
  for (const Gate& g : combo_gates(kGateCombos[step.combo], step.q_c, step.q_t))
    for (size_t i : append_clifford(state, g)) stale[i] = 1;
  for (size_t i = 0; i < state.remaining.size(); ++i)
    if (stale[i])
      state.remaining[i].distance = state.distance_of(state.remaining[i]);
  if (state.remaining[gadget_idx].distance != before - 1)
    throw internal_error("step did not reduce the selected gadget distance");
}

// Diagonalizes the single remaining letter to Z, emits Rz(2 * angle) and
// retires the gadget.
inline void finalize_gadget(SynthState& state, size_t gadget_idx) {
  SynthGadget& gad = state.remaining[gadget_idx];
  if (gad.distance != 0)
    throw internal_error("finalize called on an uncontracted gadget");
  uint32_t q = 0;
  size_t support = 0;
  for (uint32_t v = 0; v < gad.letters.size(); ++v) {
    if (gad.letters[v] != Pauli::I) {
      q = v;
      ++support;
    }
  }
  if (support != 1)
    throw internal_error("contracted gadget does not have a single letter");
  switch (gad.letters[q]) {
    case Pauli::Z: break;
    case Pauli::Y: append_clifford(state, Gate::v(q)); break;
    case Pauli::X:
      append_clifford(state, Gate::s(q));
      append_clifford(state, Gate::v(q));
      break;
    case Pauli::I: throw internal_error("unreachable");
  }
  if (state.remaining[gadget_idx].letters[q] != Pauli::Z)
    throw internal_error("diagonalization did not reach Z");
  state.prefix.append(Gate::rz(q, 2.0 * state.remaining[gadget_idx].angle));
  state.processed_order.push_back(state.remaining[gadget_idx].original_index);
  state.remaining.erase(state.remaining.begin() +
                        static_cast<std::ptrdiff_t>(gadget_idx));
}

// Builds the initial synthesis state: places qubits per the mapping mode,
// embeds the gadget letters at their physical positions and caches the
// distances. Identity-weight gadgets are skipped with a note (they only
// contribute a global phase).
inline SynthState make_state(const PauliExponential& e, const CouplingGraph& g,
                             const SynthOptions& opts) {
  if (e.gadgets.empty()) throw input_error("exponential has no gadgets");
  if (e.n_qubits == 0) throw input_error("exponential has no qubits");
  if (e.n_qubits > g.n_qubits)
    throw input_error("more logical qubits (" + std::to_string(e.n_qubits) +
                      ") than physical qubits (" +
                      std::to_string(g.n_qubits) + ")");

  SynthState state;
  state.graph = &g;
  switch (opts.mode) {
    case MappingMode::Sppf: {
      MappingResult r = build_mapping(e, g);
      state.mapping = std::move(r.mapping);
      state.tree = std::move(r.tree);
      break;
    }
    case MappingMode::Identity:
    case MappingMode::Random: {
      state.mapping = QubitMapping::trivial(e.n_qubits, g.n_qubits);
      if (opts.mode == MappingMode::Random) {
        // Fisher-Yates over the physical indices, seeded with splitmix64.
        std::vector<uint32_t> phys(g.n_qubits);
        for (uint32_t i = 0; i < g.n_qubits; ++i) phys[i] = i;
        uint64_t s = opts.seed;
        auto rng = [&]() { return s = detail::splitmix64(s); };
        for (uint32_t i = g.n_qubits - 1; i > 0; --i) {
          uint32_t j = static_cast<uint32_t>(rng() % (i + 1));
          std::swap(phys[i], phys[j]);
        }
        state.mapping.phys_to_log.assign(g.n_qubits, -1);
        for (size_t l = 0; l < e.n_qubits; ++l)
          state.mapping.assign(static_cast<uint32_t>(l), phys[l]);
      }
      DistanceMatrix d = all_pairs_distances(g);
      state.tree = bfs_tree(g, find_root_physical(g, d));
      break;
    }
  }

  state.prefix = Circuit(g.n_qubits);
  state.trailing = CliffordTableau::identity(g.n_qubits);
  for (const PauliGadget& gad : e.gadgets) {
    SynthGadget sg;
    sg.letters.assign(g.n_qubits, Pauli::I);
    for (size_t l = 0; l < gad.string.size(); ++l)
      sg.letters[state.mapping.log_to_phys[l]] = gad.string[l];
    sg.angle = gad.angle;
    sg.original_index = gad.original_index;
    sg.distance = state.distance_of(sg);
    if (sg.distance < 0) {
      if (gad.angle != 0.0)
        state.notes.push_back("gadget " + std::to_string(gad.original_index) +
                              " is the identity string; skipped (contributes "
                              "a global phase only)");
      continue;
    }
    state.remaining.push_back(std::move(sg));
  }
  return state;
}

// Full pipeline: map, decompose greedily, then synthesize the accumulated
// trailing Clifford over the coupling graph and concatenate.
inline SynthResult synthesize(const PauliExponential& e, const CouplingGraph& g,
                              const SynthOptions& opts = {}) {
  auto t_start = std::chrono::steady_clock::now();

  SynthResult result;
  result.commuting = mutually_commuting(e);
  if (!result.commuting && !opts.allow_reorder)
    throw input_error(
        "gadgets do not mutually commute; processing order changes the "
        "operator (pass the reorder acknowledgment to proceed)");
  if (!result.commuting)
    result.notes.push_back(
        "gadgets do not mutually commute: the circuit implements the "
        "processed-order product, not the input-order product");

  SynthState state = make_state(e, g, opts);
  while (!state.remaining.empty()) {
    size_t idx = select_next_gadget(state);
    while (state.remaining[idx].distance > 0) {
      auto steps = enumerate_steps(state, idx);
      if (steps.empty()) throw internal_error("no candidate steps");
      size_t best = 0;
      double best_score = score_step(state, steps[0]);
      for (size_t i = 1; i < steps.size(); ++i) {
        double sc = score_step(state, steps[i]);
        if (sc < best_score) {
          best = i;
          best_score = sc;
        }
      }
      apply_step(state, idx, steps[best]);
    }
    finalize_gadget(state, idx);
  }

  size_t prefix_cnots = state.prefix.cnot_count();
  Circuit tail = synthesize(state.trailing, g);
  result.circuit = std::move(state.prefix);
  result.circuit.extend(tail);

  result.mapping = std::move(state.mapping);
  result.tree = std::move(state.tree);
  result.processed_order = std::move(state.processed_order);
  for (auto& note : state.notes) result.notes.push_back(std::move(note));

  result.stats.cnot_count = result.circuit.cnot_count();
  result.stats.cnot_depth = result.circuit.cnot_depth();
  result.stats.total_gates = result.circuit.size();
  result.stats.synthesis_cnots = prefix_cnots;
  result.stats.tableau_cnots = result.stats.cnot_count - prefix_cnots;
  result.stats.runtime_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - t_start)
          .count();
  return result;
}

}  // namespace sppf
