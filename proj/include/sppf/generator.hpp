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
#include <numbers>
#include <vector>

#include "sppf/errors.hpp"
#include "sppf/pauli.hpp"
#include "sppf/synth.hpp"

namespace sppf {

// Random workload generator. Each gadget draws a leg count uniformly from
// 1..n_qubits, places the legs at distinct uniform positions, draws letters
// uniformly from {X, Y, Z} and the angle uniformly from
// {pi, pi/2, pi/4, pi/8, pi/16}. Fully determined by the seed; the stream is
// a splitmix64 chain so results are platform-independent.
inline PauliExponential random_exponential(size_t n_qubits, size_t n_gadgets,
                                           uint64_t seed) {
  if (n_qubits == 0) throw input_error("need at least one qubit");
  static const std::array<double, 5> kAngles = {
      std::numbers::pi, std::numbers::pi / 2, std::numbers::pi / 4,
      std::numbers::pi / 8, std::numbers::pi / 16};
  static constexpr std::array<Pauli, 3> kLetters = {Pauli::X, Pauli::Y,
                                                    Pauli::Z};
  uint64_t s = detail::splitmix64(seed ^ 0x5050505050505050ull);
  auto rng = [&]() { return s = detail::splitmix64(s); };

  PauliExponential e(n_qubits);
  std::vector<uint32_t> positions(n_qubits);
  for (size_t k = 0; k < n_gadgets; ++k) {
    size_t legs = 1 + static_cast<size_t>(rng() % n_qubits);
    for (uint32_t i = 0; i < n_qubits; ++i) positions[i] = i;
    PauliString str(n_qubits);
    for (size_t leg = 0; leg < legs; ++leg) {
      // partial Fisher-Yates: positions without replacement
      size_t j = leg + static_cast<size_t>(rng() % (n_qubits - leg));
      std::swap(positions[leg], positions[j]);
      str[positions[leg]] = kLetters[rng() % 3];
    }
    e.add(PauliGadget(std::move(str), kAngles[rng() % 5]));
  }
  return e;
}

}  // namespace sppf
