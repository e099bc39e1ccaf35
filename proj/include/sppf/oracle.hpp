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

// Brute-force numerical ground truth. Everything here works on dense
// 2^n x 2^n matrices and is deliberately independent of the symplectic /
// conjugation machinery it is used to certify. Qubit 0 is the least
// significant bit of the basis index.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "sppf/circuit.hpp"
#include "sppf/errors.hpp"
#include "sppf/pauli.hpp"

namespace sppf::oracle {

using DenseUnitary = Eigen::MatrixXcd;
using Complex = std::complex<double>;

// 2^12 keeps a dense complex matrix under ~270 MB.
inline constexpr uint32_t kMaxOracleQubits = 12;

inline void check_width(uint32_t n) {
  if (n > kMaxOracleQubits)
    throw input_error("oracle refuses more than " +
                      std::to_string(kMaxOracleQubits) + " qubits");
}

inline Eigen::Matrix2cd pauli_matrix(Pauli p) {
  const Complex i(0, 1);
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -i, i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Eigen::Matrix2cd single_gate_matrix(GateKind k, double angle = 0.0) {
  const Complex i(0, 1);
  Eigen::Matrix2cd m;
  switch (k) {
    case GateKind::V: m << 0.5 * (1. + i), 0.5 * (1. - i), 0.5 * (1. - i), 0.5 * (1. + i); break;
    case GateKind::Vdg: m << 0.5 * (1. - i), 0.5 * (1. + i), 0.5 * (1. + i), 0.5 * (1. - i); break;
    case GateKind::S: m << 1, 0, 0, i; break;
    case GateKind::Sdg: m << 1, 0, 0, -i; break;
    case GateKind::Rz:
      m << std::exp(-i * angle / 2.0), 0, 0, std::exp(i * angle / 2.0);
      break;
    case GateKind::Cnot:
      throw internal_error("CNOT has no 2x2 matrix");
  }
  return m;
}

namespace detail {

// Left-multiplies M by the single-qubit gate embedded at position q.
inline void apply_single_left(DenseUnitary& m, const Eigen::Matrix2cd& u,
                              uint32_t q) {
  const auto dim = static_cast<Eigen::Index>(m.rows());
  const Eigen::Index bit = Eigen::Index(1) << q;
  for (Eigen::Index r0 = 0; r0 < dim; ++r0) {
    if (r0 & bit) continue;
    Eigen::Index r1 = r0 | bit;
    for (Eigen::Index c = 0; c < dim; ++c) {
      Complex a = m(r0, c), b = m(r1, c);
      m(r0, c) = u(0, 0) * a + u(0, 1) * b;
      m(r1, c) = u(1, 0) * a + u(1, 1) * b;
    }
  }
}

inline void apply_cnot_left(DenseUnitary& m, uint32_t control,
                            uint32_t target) {
  const auto dim = static_cast<Eigen::Index>(m.rows());
  const Eigen::Index cbit = Eigen::Index(1) << control;
  const Eigen::Index tbit = Eigen::Index(1) << target;
  for (Eigen::Index r = 0; r < dim; ++r) {
    if ((r & cbit) && !(r & tbit)) m.row(r).swap(m.row(r | tbit));
  }
}

}  // namespace detail

// Ordered product of gate matrices embedded at their qubit positions; the
// first gate in the circuit acts first.
inline DenseUnitary circuit_unitary(const Circuit& c) {
  check_width(c.n_qubits);
  const Eigen::Index dim = Eigen::Index(1) << c.n_qubits;
  DenseUnitary u = DenseUnitary::Identity(dim, dim);
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Cnot)
      detail::apply_cnot_left(u, g.q0, g.q1);
    else
      detail::apply_single_left(u, single_gate_matrix(g.kind, g.angle), g.q0);
  }
  return u;
}

// Kronecker product of letter matrices, as a phase-permutation.
inline DenseUnitary pauli_string_matrix(const PauliString& s) {
  check_width(static_cast<uint32_t>(s.size()));
  const Eigen::Index dim = Eigen::Index(1) << s.size();
  const Complex i(0, 1);
  Eigen::Index xmask = 0;
  for (size_t q = 0; q < s.size(); ++q)
    if (x_bit(s[q])) xmask |= Eigen::Index(1) << q;
  DenseUnitary m = DenseUnitary::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Complex phase = 1;
    for (size_t q = 0; q < s.size(); ++q) {
      bool bit = (col >> q) & 1;
      switch (s[q]) {
        case Pauli::I: case Pauli::X: break;
        case Pauli::Z: if (bit) phase = -phase; break;
        case Pauli::Y: phase *= bit ? -i : i; break;
      }
    }
    m(col ^ xmask, col) = phase;
  }
  return m;
}

// exp(-i a P) = cos(a) I - i sin(a) P, exact because P^2 = I.
inline DenseUnitary gadget_unitary(const PauliGadget& g) {
  const Eigen::Index dim = Eigen::Index(1) << g.string.size();
  const Complex i(0, 1);
  DenseUnitary p = pauli_string_matrix(g.string);
  return std::cos(g.angle) * DenseUnitary::Identity(dim, dim) -
         i * std::sin(g.angle) * p;
}

// Product of gadget unitaries in the given order; the leftmost factor is
// applied last.
inline DenseUnitary exponential_unitary(const PauliExponential& e,
                                        const std::vector<size_t>& order) {
  check_width(static_cast<uint32_t>(e.n_qubits));
  const Eigen::Index dim = Eigen::Index(1) << e.n_qubits;
  std::vector<char> seen(e.gadgets.size(), 0);
  DenseUnitary u = DenseUnitary::Identity(dim, dim);
  for (size_t k : order) {
    if (k >= e.gadgets.size() || seen[k])
      throw input_error("order is not a valid list of gadget indices");
    seen[k] = 1;
    u = u * gadget_unitary(e.gadgets[k]);
  }
  return u;
}

inline DenseUnitary exponential_unitary(const PauliExponential& e) {
  std::vector<size_t> order(e.gadgets.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = order.size() - 1 - k;
  return exponential_unitary(e, order);
}

// True iff max_ij |U_ij - lambda W_ij| <= tol, with lambda read off at the
// largest-magnitude entry of W.
inline bool equiv_up_to_phase(const DenseUnitary& u, const DenseUnitary& w,
                              double tol = 1e-9) {
  if (u.rows() != w.rows() || u.cols() != w.cols())
    throw input_error("dimension mismatch in equivalence check");
  Eigen::Index r = 0, c = 0;
  w.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(w(r, c)) < 1e-300) return u.cwiseAbs().maxCoeff() <= tol;
  Complex lambda = u(r, c) / w(r, c);
  return (u - lambda * w).cwiseAbs().maxCoeff() <= tol;
}

inline bool is_unitary(const DenseUnitary& u, double tol = 1e-10) {
  DenseUnitary gram = u.adjoint() * u;
  return (gram - DenseUnitary::Identity(u.rows(), u.cols()))
             .cwiseAbs()
             .maxCoeff() <= tol;
}

}  // namespace sppf::oracle
