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

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sppf/circuit.hpp"
#include "sppf/errors.hpp"

namespace sppf {

// Pauli letter encoded as a bit pair: bit 0 is the X component, bit 1 the
// Z component. I=(0,0), X=(1,0), Z=(0,1), Y=(1,1). With this encoding the
// CNOT conjugation rule is literal bit addition mod 2.
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline constexpr bool x_bit(Pauli p) {
  return (static_cast<uint8_t>(p) & 1u) != 0;
}
inline constexpr bool z_bit(Pauli p) {
  return (static_cast<uint8_t>(p) & 2u) != 0;
}
inline constexpr Pauli pauli_from_bits(bool x, bool z) {
  return static_cast<Pauli>((x ? 1u : 0u) | (z ? 2u : 0u));
}

inline constexpr char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Z: return 'Z';
    case Pauli::Y: return 'Y';
  }
  return '?';
}

inline Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Z': case 'z': return Pauli::Z;
    case 'Y': case 'y': return Pauli::Y;
    default: throw input_error(std::string("invalid Pauli letter '") + c + "'");
  }
}

struct SingleConj {
  Pauli letter;
  int sign;  // +1 or -1
};

// conj_single(g, P) returns (P', s) with  g' . P . g = s P'  as 2x2 matrices,
// where g' denotes the adjoint of g. Letters follow the bit-addition rules
// (V family adds the X component to the Z component, S family the reverse);
// the signs are fixed by the matrix identity and checked against the dense
// oracle in the test suite.
inline SingleConj conj_single(GateKind g, Pauli p) {
  // Indexed by Pauli value: I=0, X=1, Z=2, Y=3.
  static constexpr std::array<std::array<SingleConj, 4>, 4> table = {{
      // V:    I        X            Z            Y
      {{{Pauli::I, 1}, {Pauli::X, 1}, {Pauli::Y, 1}, {Pauli::Z, -1}}},
      // Vdg
      {{{Pauli::I, 1}, {Pauli::X, 1}, {Pauli::Y, -1}, {Pauli::Z, 1}}},
      // S
      {{{Pauli::I, 1}, {Pauli::Y, -1}, {Pauli::Z, 1}, {Pauli::X, 1}}},
      // Sdg
      {{{Pauli::I, 1}, {Pauli::Y, 1}, {Pauli::Z, 1}, {Pauli::X, -1}}},
  }};
  switch (g) {
    case GateKind::V: return table[0][static_cast<size_t>(p)];
    case GateKind::Vdg: return table[1][static_cast<size_t>(p)];
    case GateKind::S: return table[2][static_cast<size_t>(p)];
    case GateKind::Sdg: return table[3][static_cast<size_t>(p)];
    default: throw input_error("conj_single expects a single-qubit Clifford");
  }
}

// The Heisenberg image  g . P . g' : what a letter becomes when gate g is
// appended to the circuit in front of it.
inline SingleConj heisenberg_single(GateKind g, Pauli p) {
  return conj_single(adjoint_kind(g), p);
}

struct CnotConj {
  Pauli control;
  Pauli target;
  int sign;
};

// CNOT . (Pc (x) Pt) . CNOT = sign (Pc' (x) Pt'). Adds the X component of the
// control letter to the target and the Z component of the target letter to
// the control; the sign rule is the standard binary-symplectic phase update.
inline CnotConj conj_cnot(Pauli c, Pauli t) {
  bool xc = x_bit(c), zc = z_bit(c), xt = x_bit(t), zt = z_bit(t);
  bool flip = xc && zt && (xt == zc);  // xc*zt*(xt ^ zc ^ 1)
  return {pauli_from_bits(xc, zc ^ zt), pauli_from_bits(xt ^ xc, zt),
          flip ? -1 : 1};
}

struct PauliString {
  std::vector<Pauli> letters;

  PauliString() = default;
  explicit PauliString(size_t n) : letters(n, Pauli::I) {}
  explicit PauliString(std::string_view text) {
    letters.reserve(text.size());
    for (char c : text) letters.push_back(pauli_from_char(c));
  }

  size_t size() const { return letters.size(); }
  Pauli operator[](size_t i) const { return letters[i]; }
  Pauli& operator[](size_t i) { return letters[i]; }

  std::string str() const {
    std::string out;
    out.reserve(letters.size());
    for (Pauli p : letters) out.push_back(pauli_char(p));
    return out;
  }

  size_t weight() const {
    size_t w = 0;
    for (Pauli p : letters)
      if (p != Pauli::I) ++w;
    return w;
  }

  std::vector<size_t> support() const {
    std::vector<size_t> s;
    for (size_t i = 0; i < letters.size(); ++i)
      if (letters[i] != Pauli::I) s.push_back(i);
    return s;
  }

  bool operator==(const PauliString& o) const { return letters == o.letters; }
};

// Two Pauli strings commute iff their symplectic inner product vanishes,
// i.e. they anticommute on an even number of positions.
inline bool commutes(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size())
    throw input_error("cannot compare Pauli strings of different length");
  bool anti = false;
  for (size_t i = 0; i < a.size(); ++i) {
    Pauli p = a[i], q = b[i];
    if (p != Pauli::I && q != Pauli::I && p != q) anti = !anti;
  }
  return !anti;
}

// One rotation term exp(-i * angle * P). Sign flips picked up from Clifford
// conjugation are absorbed by negating the angle, never stored separately.
struct PauliGadget {
  PauliString string;
  double angle = 0.0;
  size_t original_index = 0;

  PauliGadget() = default;
  PauliGadget(PauliString s, double a, size_t idx = 0)
      : string(std::move(s)), angle(a), original_index(idx) {
    if (!std::isfinite(angle)) throw input_error("gadget angle must be finite");
  }
  PauliGadget(std::string_view s, double a, size_t idx = 0)
      : PauliGadget(PauliString(s), a, idx) {}

  size_t weight() const { return string.weight(); }
  std::vector<size_t> support() const { return string.support(); }

  bool operator==(const PauliGadget& o) const {
    return string == o.string && angle == o.angle;
  }
};

inline size_t weight(const PauliGadget& g) { return g.weight(); }
inline std::vector<size_t> support(const PauliGadget& g) {
  return g.support();
}

// Commutes the gate through the rotation: returns g' such that
//   U_gate . exp(-i a P) . U_gate'  =  exp(-i a' P').
// A -1 conjugation sign becomes an angle negation,
// since exp(-i a (-P)) = exp(-i (-a) P).
inline PauliGadget commute_through_gadget(const Gate& gate,
                                          const PauliGadget& g) {
  PauliGadget out = g;
  const size_t n = g.string.size();
  if (gate.q0 >= n || (gate.kind == GateKind::Cnot && gate.q1 >= n))
    throw input_error("gate qubit index out of range for gadget");
  int sign = 1;
  if (gate.kind == GateKind::Cnot) {
    CnotConj r = conj_cnot(g.string[gate.q0], g.string[gate.q1]);
    out.string[gate.q0] = r.control;
    out.string[gate.q1] = r.target;
    sign = r.sign;
  } else if (is_clifford(gate.kind)) {
    SingleConj r = heisenberg_single(gate.kind, g.string[gate.q0]);
    out.string[gate.q0] = r.letter;
    sign = r.sign;
  } else {
    throw input_error("cannot commute a non-Clifford gate through a gadget");
  }
  if (sign < 0) out.angle = -out.angle;
  return out;
}

// An ordered product of Pauli gadgets over a fixed register width.
struct PauliExponential {
  size_t n_qubits = 0;
  std::vector<PauliGadget> gadgets;

  PauliExponential() = default;
  explicit PauliExponential(size_t n) : n_qubits(n) {}

  void add(PauliGadget g) {
    if (g.string.size() != n_qubits)
      throw input_error("gadget string length does not match qubit count");
    g.original_index = gadgets.size();
    gadgets.push_back(std::move(g));
  }

  size_t size() const { return gadgets.size(); }
};

inline bool mutually_commuting(const PauliExponential& e) {
  for (size_t i = 0; i < e.gadgets.size(); ++i)
    for (size_t j = i + 1; j < e.gadgets.size(); ++j)
      if (!commutes(e.gadgets[i].string, e.gadgets[j].string)) return false;
  return true;
}

// Text format: one gadget per line, "<letters> <angle-radians>".
// '#' begins a comment, blank lines are ignored, all strings share one length.
inline PauliExponential parse_exponential(std::string_view text) {
  PauliExponential e;
  bool have_width = false;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a != std::string::npos) {
      size_t b = line.find_first_of(" \t\r", a);
      if (b == std::string::npos)
        throw input_error("line " + std::to_string(line_no) +
                          ": expected '<letters> <angle>'");
      std::string letters = line.substr(a, b - a);
      size_t c = line.find_first_not_of(" \t\r", b);
      if (c == std::string::npos)
        throw input_error("line " + std::to_string(line_no) + ": missing angle");
      std::string rest = line.substr(c);
      if (rest.find_first_of(" \t") != std::string::npos &&
          rest.find_first_not_of(" \t\r", rest.find_first_of(" \t")) !=
              std::string::npos)
        throw input_error("line " + std::to_string(line_no) +
                          ": trailing tokens after angle");
      char* end = nullptr;
      double angle = std::strtod(rest.c_str(), &end);
      if (end == rest.c_str() || !std::isfinite(angle))
        throw input_error("line " + std::to_string(line_no) + ": bad angle '" +
                          rest + "'");
      PauliString ps(letters);
      if (!have_width) {
        e.n_qubits = ps.size();
        have_width = true;
      } else if (ps.size() != e.n_qubits) {
        throw input_error("line " + std::to_string(line_no) +
                          ": string length " + std::to_string(ps.size()) +
                          " differs from earlier length " +
                          std::to_string(e.n_qubits));
      }
      e.add(PauliGadget(std::move(ps), angle));
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return e;
}

inline std::string to_text(const PauliExponential& e) {
  std::string out;
  for (const PauliGadget& g : e.gadgets) {
    out += g.string.str();
    out += ' ';
    out += detail::format_angle(g.angle);
    out += '\n';
  }
  return out;
}

}  // namespace sppf
