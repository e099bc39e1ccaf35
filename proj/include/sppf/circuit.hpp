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
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sppf/errors.hpp"

namespace sppf {

// Gate set used to decompose Pauli exponentials: V = sqrt(X), S = sqrt(Z),
// their adjoints, CNOT and Rz. QASM spellings: sx, sxdg, s, sdg, cx, rz.
enum class GateKind : uint8_t { V, Vdg, S, Sdg, Cnot, Rz };

inline constexpr bool is_single_qubit(GateKind k) {
  return k != GateKind::Cnot;
}

inline constexpr bool is_clifford(GateKind k) { return k != GateKind::Rz; }

inline constexpr GateKind adjoint_kind(GateKind k) {
  switch (k) {
    case GateKind::V: return GateKind::Vdg;
    case GateKind::Vdg: return GateKind::V;
    case GateKind::S: return GateKind::Sdg;
    case GateKind::Sdg: return GateKind::S;
    case GateKind::Cnot: return GateKind::Cnot;
    case GateKind::Rz: return GateKind::Rz;  // angle negated by Gate::adjoint
  }
  return k;
}

inline constexpr const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::V: return "sx";
    case GateKind::Vdg: return "sxdg";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::Cnot: return "cx";
    case GateKind::Rz: return "rz";
  }
  return "?";
}

struct Gate {
  GateKind kind = GateKind::V;
  uint32_t q0 = 0;
  uint32_t q1 = 0;     // CNOT target; unused otherwise
  double angle = 0.0;  // Rz only

  static Gate v(uint32_t q) { return {GateKind::V, q, 0, 0.0}; }
  static Gate vdg(uint32_t q) { return {GateKind::Vdg, q, 0, 0.0}; }
  static Gate s(uint32_t q) { return {GateKind::S, q, 0, 0.0}; }
  static Gate sdg(uint32_t q) { return {GateKind::Sdg, q, 0, 0.0}; }
  static Gate cnot(uint32_t control, uint32_t target) {
    if (control == target)
      throw input_error("CNOT requires two distinct qubits");
    return {GateKind::Cnot, control, target, 0.0};
  }
  static Gate rz(uint32_t q, double theta) {
    if (!std::isfinite(theta)) throw input_error("Rz angle must be finite");
    return {GateKind::Rz, q, 0, theta};
  }

  Gate adjoint() const {
    Gate g = *this;
    g.kind = adjoint_kind(kind);
    if (kind == GateKind::Rz) g.angle = -angle;
    return g;
  }

  bool operator==(const Gate& o) const {
    return kind == o.kind && q0 == o.q0 && q1 == o.q1 && angle == o.angle;
  }
};

struct Circuit {
  uint32_t n_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(uint32_t n) : n_qubits(n) {}

  void append(const Gate& g) {
    if (g.q0 >= n_qubits || (g.kind == GateKind::Cnot && g.q1 >= n_qubits))
      throw input_error("gate qubit index out of range");
    gates.push_back(g);
  }

  void extend(const Circuit& other) {
    if (other.n_qubits > n_qubits)
      throw input_error("cannot extend with a wider circuit");
    for (const Gate& g : other.gates) gates.push_back(g);
  }

  size_t size() const { return gates.size(); }

  size_t cnot_count() const {
    return static_cast<size_t>(
        std::count_if(gates.begin(), gates.end(), [](const Gate& g) {
          return g.kind == GateKind::Cnot;
        }));
  }

  // Layers of an as-soon-as-possible schedule of the CNOT-only subcircuit;
  // single-qubit gates are ignored, two CNOTs conflict iff they share a qubit.
  size_t cnot_depth() const {
    std::vector<size_t> busy(n_qubits, 0);
    size_t depth = 0;
    for (const Gate& g : gates) {
      if (g.kind != GateKind::Cnot) continue;
      size_t layer = std::max(busy[g.q0], busy[g.q1]) + 1;
      busy[g.q0] = busy[g.q1] = layer;
      depth = std::max(depth, layer);
    }
    return depth;
  }

  Circuit adjoint() const {
    Circuit out(n_qubits);
    out.gates.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it)
      out.gates.push_back(it->adjoint());
    return out;
  }

  bool operator==(const Circuit& o) const {
    return n_qubits == o.n_qubits && gates == o.gates;
  }
};

namespace detail {

// 17 significant digits: enough to reproduce any double exactly.
inline std::string format_angle(double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", a);
  return buf;
}

}  // namespace detail

inline std::string to_qasm(const Circuit& c) {
  std::string out = "OPENQASM 2.0;\n";
  out += "qreg q[" + std::to_string(c.n_qubits) + "];\n";
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Cnot:
        out += "cx q[" + std::to_string(g.q0) + "],q[" + std::to_string(g.q1) +
               "];\n";
        break;
      case GateKind::Rz:
        out += "rz(" + detail::format_angle(g.angle) + ") q[" +
               std::to_string(g.q0) + "];\n";
        break;
      default:
        out += std::string(gate_name(g.kind)) + " q[" + std::to_string(g.q0) +
               "];\n";
        break;
    }
  }
  return out;
}

inline std::string to_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : c.gates) {
    nlohmann::json jg;
    jg["kind"] = gate_name(g.kind);
    if (g.kind == GateKind::Cnot)
      jg["qubits"] = {g.q0, g.q1};
    else
      jg["qubits"] = {g.q0};
    if (g.kind == GateKind::Rz) jg["angle"] = g.angle;
    gates.push_back(std::move(jg));
  }
  nlohmann::json j;
  j["n"] = c.n_qubits;
  j["gates"] = std::move(gates);
  return j.dump(2) + "\n";
}

namespace detail {

inline bool kind_from_name(std::string_view name, GateKind& out) {
  if (name == "sx") out = GateKind::V;
  else if (name == "sxdg") out = GateKind::Vdg;
  else if (name == "s") out = GateKind::S;
  else if (name == "sdg") out = GateKind::Sdg;
  else if (name == "cx") out = GateKind::Cnot;
  else if (name == "rz") out = GateKind::Rz;
  else return false;
  return true;
}

[[noreturn]] inline void qasm_fail(size_t line, size_t col,
                                   const std::string& msg) {
  throw input_error("qasm parse error at line " + std::to_string(line) +
                    ", column " + std::to_string(col) + ": " + msg);
}

}  // namespace detail

inline Circuit circuit_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("circuit json parse error: ") + e.what());
  }
  try {
    Circuit c(j.at("n").get<uint32_t>());
    for (const auto& jg : j.at("gates")) {
      GateKind kind;
      if (!detail::kind_from_name(jg.at("kind").get<std::string>(), kind))
        throw input_error("unknown gate kind '" +
                          jg.at("kind").get<std::string>() + "'");
      const auto& qs = jg.at("qubits");
      if (kind == GateKind::Cnot) {
        if (qs.size() != 2) throw input_error("cx expects two qubits");
        c.append(Gate::cnot(qs[0].get<uint32_t>(), qs[1].get<uint32_t>()));
      } else if (kind == GateKind::Rz) {
        if (qs.size() != 1) throw input_error("rz expects one qubit");
        c.append(Gate::rz(qs[0].get<uint32_t>(), jg.at("angle").get<double>()));
      } else {
        if (qs.size() != 1) throw input_error("single-qubit gate expects one qubit");
        c.append(Gate{kind, qs[0].get<uint32_t>(), 0, 0.0});
      }
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("circuit json: ") + e.what());
  }
}

inline Circuit circuit_from_qasm(std::string_view text) {
  Circuit c;
  bool have_qreg = false;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    size_t begin = line.find_first_not_of(" \t\r");
    if (begin != std::string_view::npos && !line.substr(begin).empty() &&
        line.substr(begin, 2) != "//") {
      std::string_view stmt = line.substr(begin);
      size_t semi = stmt.find(';');
      if (semi == std::string_view::npos)
        detail::qasm_fail(line_no, begin + stmt.size() + 1, "missing ';'");
      stmt = stmt.substr(0, semi);
      auto read_qubit = [&](std::string_view s, size_t at) -> uint32_t {
        size_t open = s.find("q[", at);
        if (open == std::string_view::npos)
          detail::qasm_fail(line_no, begin + at + 1, "expected qubit operand");
        size_t close = s.find(']', open);
        if (close == std::string_view::npos)
          detail::qasm_fail(line_no, begin + open + 1, "unterminated qubit index");
        uint32_t q = 0;
        auto digits = s.substr(open + 2, close - open - 2);
        if (digits.empty())
          detail::qasm_fail(line_no, begin + open + 3, "empty qubit index");
        for (char ch : digits) {
          if (ch < '0' || ch > '9')
            detail::qasm_fail(line_no, begin + open + 3, "bad qubit index");
          q = q * 10 + static_cast<uint32_t>(ch - '0');
        }
        return q;
      };
      if (stmt.rfind("OPENQASM", 0) == 0 || stmt.rfind("include", 0) == 0) {
        // version / include headers tolerated
      } else if (stmt.rfind("qreg", 0) == 0) {
        c.n_qubits = read_qubit(stmt, 4);
        have_qreg = true;
      } else {
        if (!have_qreg)
          detail::qasm_fail(line_no, begin + 1, "gate before qreg declaration");
        size_t name_end = stmt.find_first_of(" (\t");
        if (name_end == std::string_view::npos)
          detail::qasm_fail(line_no, begin + 1, "malformed statement");
        std::string name(stmt.substr(0, name_end));
        GateKind kind;
        if (!detail::kind_from_name(name, kind))
          detail::qasm_fail(line_no, begin + 1, "unknown gate '" + name + "'");
        if (kind == GateKind::Cnot) {
          uint32_t a = read_qubit(stmt, name_end);
          size_t comma = stmt.find(',', stmt.find(']', name_end));
          if (comma == std::string_view::npos)
            detail::qasm_fail(line_no, begin + name_end + 1, "cx expects two operands");
          uint32_t b = read_qubit(stmt, comma);
          c.append(Gate::cnot(a, b));
        } else if (kind == GateKind::Rz) {
          size_t open = stmt.find('(');
          size_t close = stmt.find(')');
          if (open == std::string_view::npos || close == std::string_view::npos ||
              close < open)
            detail::qasm_fail(line_no, begin + name_end + 1, "rz expects an angle");
          std::string num(stmt.substr(open + 1, close - open - 1));
          char* end = nullptr;
          double angle = std::strtod(num.c_str(), &end);
          if (end == num.c_str() || !std::isfinite(angle))
            detail::qasm_fail(line_no, begin + open + 2, "bad rz angle");
          c.append(Gate::rz(read_qubit(stmt, close), angle));
        } else {
          c.append(Gate{kind, read_qubit(stmt, name_end), 0, 0.0});
        }
      }
    }
    pos = eol + 1;
  }
  if (!have_qreg) throw input_error("qasm parse error: no qreg declaration");
  return c;
}

// Accepts either of the two serialized forms; JSON starts with '{'.
inline Circuit parse_circuit(std::string_view text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw input_error("empty circuit text");
  return text[first] == '{' ? circuit_from_json(text) : circuit_from_qasm(text);
}

}  // namespace sppf
