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

#include <catch2/catch.hpp>

#include "sppf/oracle.hpp"
#include "sppf/pauli.hpp"
#include "test_helpers.hpp"

using namespace sppf;
using oracle::DenseUnitary;

namespace {

constexpr std::array<Pauli, 4> kAllLetters = {Pauli::I, Pauli::X, Pauli::Y,
                                              Pauli::Z};
constexpr std::array<GateKind, 4> kSingleCliffords = {
    GateKind::V, GateKind::Vdg, GateKind::S, GateKind::Sdg};

// Dense route for g^dag . P . g: letters and sign recovered by matching
// against all eight signed letters.
SingleConj dense_conj_single(GateKind k, Pauli p) {
  DenseUnitary g = oracle::single_gate_matrix(k);
  DenseUnitary image = g.adjoint() * oracle::pauli_matrix(p) * g;
  for (Pauli q : kAllLetters) {
    for (int sign : {1, -1}) {
      if ((image - static_cast<double>(sign) * oracle::pauli_matrix(q))
              .cwiseAbs()
              .maxCoeff() < 1e-12)
        return {q, sign};
    }
  }
  FAIL("conjugated Pauli is not a signed Pauli");
  return {Pauli::I, 1};
}

}  // namespace

TEST_CASE("letter encoding is the (x,z) bit pair", "[pauli]") {
  REQUIRE(pauli_from_bits(false, false) == Pauli::I);
  REQUIRE(pauli_from_bits(true, false) == Pauli::X);
  REQUIRE(pauli_from_bits(false, true) == Pauli::Z);
  REQUIRE(pauli_from_bits(true, true) == Pauli::Y);
  for (Pauli p : kAllLetters) {
    REQUIRE(pauli_from_bits(x_bit(p), z_bit(p)) == p);
    REQUIRE(pauli_from_char(pauli_char(p)) == p);
  }
  REQUIRE_THROWS_AS(pauli_from_char('Q'), input_error);
}

TEST_CASE("conj_single matches the dense 2x2 oracle on every case",
          "[pauli][conjugation]") {
  for (GateKind k : kSingleCliffords) {
    for (Pauli p : kAllLetters) {
      SingleConj got = conj_single(k, p);
      SingleConj want = dense_conj_single(k, p);
      INFO(gate_name(k) << " on " << pauli_char(p));
      REQUIRE(got.letter == want.letter);
      REQUIRE(got.sign == want.sign);
    }
  }
}

TEST_CASE("conj_single known commutation identities", "[pauli][conjugation]") {
  // Vdg swaps Z and Y and commutes with X; S commutes with Z.
  REQUIRE(conj_single(GateKind::Vdg, Pauli::Z).letter == Pauli::Y);
  REQUIRE(conj_single(GateKind::Vdg, Pauli::X).letter == Pauli::X);
  REQUIRE(conj_single(GateKind::Vdg, Pauli::X).sign == 1);
  REQUIRE(conj_single(GateKind::S, Pauli::I).letter == Pauli::I);
  REQUIRE(conj_single(GateKind::S, Pauli::I).sign == 1);
  REQUIRE(conj_single(GateKind::S, Pauli::Z).letter == Pauli::Z);
}

TEST_CASE("conj_cnot matches the dense 4x4 oracle on all 16 pairs",
          "[pauli][conjugation]") {
  Circuit cn(2);
  cn.append(Gate::cnot(0, 1));
  DenseUnitary u = oracle::circuit_unitary(cn);
  for (Pauli c : kAllLetters) {
    for (Pauli t : kAllLetters) {
      PauliString in(2);
      in[0] = c;
      in[1] = t;
      DenseUnitary image = u * oracle::pauli_string_matrix(in) * u.adjoint();
      CnotConj got = conj_cnot(c, t);
      PauliString out(2);
      out[0] = got.control;
      out[1] = got.target;
      INFO("pair " << pauli_char(c) << pauli_char(t));
      REQUIRE((image - static_cast<double>(got.sign) *
                           oracle::pauli_string_matrix(out))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("conj_cnot trivia", "[pauli][conjugation]") {
  CnotConj xi = conj_cnot(Pauli::X, Pauli::I);
  REQUIRE(xi.control == Pauli::X);
  REQUIRE(xi.target == Pauli::X);  // the X component of c is added to t
  REQUIRE(xi.sign == 1);
  CnotConj ii = conj_cnot(Pauli::I, Pauli::I);
  REQUIRE(ii.control == Pauli::I);
  REQUIRE(ii.target == Pauli::I);
  REQUIRE(ii.sign == 1);
}

TEST_CASE("commute_through_gadget", "[pauli][conjugation]") {
  SECTION("Sdg commutes with Z") {
    PauliGadget g("Z", 0.3);
    PauliGadget out = commute_through_gadget(Gate::sdg(0), g);
    REQUIRE(out.string.str() == "Z");
    REQUIRE(out.angle == 0.3);
  }
  SECTION("identity string is fixed by everything") {
    PauliGadget g("II", 1.0);
    PauliGadget out = commute_through_gadget(Gate::cnot(0, 1), g);
    REQUIRE(out.string.str() == "II");
    REQUIRE(out.angle == 1.0);
  }
  SECTION("Vdg turns Z into Y, angle sign fixed by the unitary oracle") {
    PauliGadget g("Z", 0.3);
    Gate gate = Gate::vdg(0);
    PauliGadget out = commute_through_gadget(gate, g);
    REQUIRE(out.string.str() == "Y");
    // exp(-i 0.3 Z) must equal G^dag exp(-i a' Y) G
    Circuit gc(1);
    gc.append(gate);
    DenseUnitary gu = oracle::circuit_unitary(gc);
    DenseUnitary lhs = oracle::gadget_unitary(g);
    DenseUnitary rhs = gu.adjoint() * oracle::gadget_unitary(out) * gu;
    REQUIRE((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
  SECTION("index out of range") {
    PauliGadget g("Z", 0.3);
    REQUIRE_THROWS_AS(commute_through_gadget(Gate::s(1), g), input_error);
    REQUIRE_THROWS_AS(commute_through_gadget(Gate::cnot(0, 2), g),
                      input_error);
  }
}

TEST_CASE("gadget conjugation identity certifies the engine",
          "[pauli][conjugation][oracle]") {
  // For every supported step G and random gadgets g:
  //   U_G . exp(-i a P) . U_G^dag  ==  exp(-i a' P')
  testing::Rng rng(99);
  for (int rep = 0; rep < 40; ++rep) {
    PauliString s(3);
    for (size_t q = 0; q < 3; ++q)
      s[q] = static_cast<Pauli>(rng.below(4));
    PauliGadget g(s, 0.1 + 0.1 * static_cast<double>(rng.below(30)));
    Gate step = testing::random_clifford_gate(rng, 3);
    PauliGadget out = commute_through_gadget(step, g);
    Circuit sc(3);
    sc.append(step);
    DenseUnitary su = oracle::circuit_unitary(sc);
    DenseUnitary lhs = su * oracle::gadget_unitary(g) * su.adjoint();
    REQUIRE((lhs - oracle::gadget_unitary(out)).cwiseAbs().maxCoeff() <
            1e-12);
  }
}

TEST_CASE("step then adjoint restores the gadget exactly", "[pauli]") {
  testing::Rng rng(123);
  for (int rep = 0; rep < 60; ++rep) {
    PauliString s(4);
    for (size_t q = 0; q < 4; ++q)
      s[q] = static_cast<Pauli>(rng.below(4));
    PauliGadget g(s, 0.25 * static_cast<double>(rng.below(16)) - 2.0);
    Gate step = testing::random_clifford_gate(rng, 4);
    PauliGadget round =
        commute_through_gadget(step.adjoint(), commute_through_gadget(step, g));
    REQUIRE(round.string == g.string);
    REQUIRE(round.angle == g.angle);
  }
}

TEST_CASE("single-qubit steps preserve weight and support, CNOT moves it by "
          "at most one",
          "[pauli]") {
  testing::Rng rng(321);
  for (int rep = 0; rep < 60; ++rep) {
    PauliString s(4);
    for (size_t q = 0; q < 4; ++q)
      s[q] = static_cast<Pauli>(rng.below(4));
    PauliGadget g(s, 0.7);
    Gate step = testing::random_clifford_gate(rng, 4);
    PauliGadget out = commute_through_gadget(step, g);
    if (step.kind == GateKind::Cnot) {
      auto dw = static_cast<long>(out.weight()) - static_cast<long>(g.weight());
      REQUIRE(dw >= -1);
      REQUIRE(dw <= 1);
    } else {
      REQUIRE(out.weight() == g.weight());
      REQUIRE(out.support() == g.support());
    }
  }
}

TEST_CASE("weight and support", "[pauli]") {
  PauliGadget a("IXYZ", 0.1);
  REQUIRE(a.weight() == 3);
  REQUIRE(a.support() == std::vector<size_t>{1, 2, 3});
  PauliGadget b("IIII", 0.1);
  REQUIRE(b.weight() == 0);
  REQUIRE(b.support().empty());
  PauliGadget c("ZZ", 0.1);
  REQUIRE(c.weight() == 2);
  REQUIRE(c.support() == std::vector<size_t>{0, 1});
}

TEST_CASE("mutually_commuting", "[pauli]") {
  SECTION("ZZ and XX commute (two anticommuting positions)") {
    PauliExponential e(2);
    e.add(PauliGadget("ZZ", 0.1));
    e.add(PauliGadget("XX", 0.2));
    REQUIRE(mutually_commuting(e));
    // cross-check by the dense oracle
    auto a = oracle::gadget_unitary(e.gadgets[0]);
    auto b = oracle::gadget_unitary(e.gadgets[1]);
    REQUIRE(((a * b) - (b * a)).cwiseAbs().maxCoeff() < 1e-12);
  }
  SECTION("Z and X anticommute") {
    PauliExponential e(1);
    e.add(PauliGadget("Z", 0.1));
    e.add(PauliGadget("X", 0.2));
    REQUIRE_FALSE(mutually_commuting(e));
  }
  SECTION("disjoint support commutes") {
    PauliExponential e(2);
    e.add(PauliGadget("ZI", 0.1));
    e.add(PauliGadget("IZ", 0.2));
    REQUIRE(mutually_commuting(e));
  }
}

TEST_CASE("exponential text format", "[pauli][io]") {
  SECTION("parse with comments and blank lines") {
    auto e = parse_exponential(
        "# trotter step\n\nIXYZ 0.785398163\nZZII -0.5 # inline\n");
    REQUIRE(e.n_qubits == 4);
    REQUIRE(e.gadgets.size() == 2);
    REQUIRE(e.gadgets[0].string.str() == "IXYZ");
    REQUIRE(e.gadgets[0].angle == Approx(0.785398163));
    REQUIRE(e.gadgets[1].angle == Approx(-0.5));
    REQUIRE(e.gadgets[1].original_index == 1);
  }
  SECTION("round trip preserves angles bit for bit") {
    PauliExponential e(3);
    e.add(PauliGadget("XYZ", 0.1234567890123456789));
    e.add(PauliGadget("ZIZ", -std::numbers::pi));
    auto back = parse_exponential(to_text(e));
    REQUIRE(back.gadgets.size() == 2);
    for (size_t i = 0; i < 2; ++i) {
      REQUIRE(back.gadgets[i].string == e.gadgets[i].string);
      REQUIRE(back.gadgets[i].angle == e.gadgets[i].angle);
    }
  }
  SECTION("errors carry line numbers") {
    REQUIRE_THROWS_WITH(parse_exponential("ZZ 0.5\nZQ 0.1\n"),
                        Catch::Contains("invalid Pauli letter"));
    REQUIRE_THROWS_WITH(parse_exponential("ZZ 0.5\nZZZ 0.1\n"),
                        Catch::Contains("line 2"));
    REQUIRE_THROWS_WITH(parse_exponential("ZZ abc\n"),
                        Catch::Contains("bad angle"));
    REQUIRE_THROWS_WITH(parse_exponential("ZZ\n"), Catch::Contains("line 1"));
  }
}
