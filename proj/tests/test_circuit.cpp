// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "helpers.hpp"
#include "zxand/circuit.hpp"
#include "zxand/eval.hpp"

using namespace zxand;

namespace {
Circuit C(int w, std::vector<Gate> gs) { return {w, std::move(gs)}; }
} // namespace

TEST_CASE("gate anchors: NOT, CNOT, Toffoli permutation action") {
  // NOT on a single wire.
  NatMatrix m = circuit_matrix(C(1, {{Gate::GCX, 0, {}}}));
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(0, 1) == 1);
  // CNOT target 1 control 0 in the MSB-first convention.
  m = circuit_matrix(C(2, {{Gate::GCX, 1, {0}}}));
  for (int x = 0; x < 4; ++x) {
    int c = (x >> 1) & 1, t = x & 1;
    int y = (c << 1) | (t ^ c);
    CHECK(m.at(y, x) == 1);
  }
  // Toffoli flips wire 2 iff wires 0 and 1 are set.
  m = circuit_matrix(C(3, {{Gate::GCX, 2, {0, 1}}}));
  for (int x = 0; x < 8; ++x) {
    int y = x ^ (((x >> 2) & (x >> 1) & 1));
    CHECK(m.at(y, x) == 1);
  }
}

TEST_CASE("preparations, post-selections and units change the width") {
  Circuit c = C(0, {{Gate::Ket1, 0, {}}});
  NatMatrix m = circuit_matrix(c);
  CHECK(m.rows == 2);
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(0, 0) == 0);
  // X unit prepares the unnormalized (1,1); counit sums.
  m = circuit_matrix(C(0, {{Gate::XUnit, 0, {}}}));
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(1, 0) == 1);
  m = circuit_matrix(C(1, {{Gate::XCounit, 0, {}}}));
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 1);
  CHECK(width_out(C(2, {{Gate::Bra1, 0, {}}})) == 1);
}

TEST_CASE("width_profile validates wire indices") {
  CHECK_THROWS_AS(width_profile(C(1, {{Gate::GCX, 2, {}}})), CircuitError);
  CHECK_THROWS_AS(width_profile(C(2, {{Gate::GCX, 0, {0}}})), CircuitError);
  CHECK_THROWS_AS(width_profile(C(1, {{Gate::Swap, 0, {}}})), CircuitError);
}

TEST_CASE("derived gates expand to their defining semantics") {
  CHECK(circuit_matrix(expand_derived("cnot")) ==
        circuit_matrix(C(2, {{Gate::GCX, 1, {0}}})));
  CHECK(circuit_matrix(expand_derived("not")) ==
        circuit_matrix(C(1, {{Gate::GCX, 0, {}}})));
  NatMatrix k0 = circuit_matrix(expand_derived("ket0"));
  CHECK(k0.at(0, 0) == 1);
  CHECK(k0.at(1, 0) == 0);
  NatMatrix fan = circuit_matrix(expand_derived("fanout"));
  for (int x = 0; x < 2; ++x) CHECK(fan.at(x * 3, x) == 1); // |x> -> |xx>
  // Flipped variants act with control below the target.
  NatMatrix cf = circuit_matrix(expand_derived("cnot-flip"));
  for (int x = 0; x < 4; ++x) {
    int c = x & 1, t = (x >> 1) & 1;
    CHECK(cf.at(((t ^ c) << 1) | c, x) == 1);
  }
}

TEST_CASE("expand_to_primitive keeps the semantics and only 2-control GCX") {
  std::mt19937 rng(401);
  for (int rep = 0; rep < 40; ++rep) {
    Circuit c = testutil::random_circuit(rng, 2 + (int)(rng() % 3),
                                         1 + (int)(rng() % 8), true);
    Circuit p = expand_to_primitive(c);
    CHECK(circuit_matrix(p) == circuit_matrix(c));
    for (const Gate& g : p.gates)
      if (g.kind == Gate::GCX) CHECK(g.controls.size() == 2);
  }
}

TEST_CASE("circuit_to_diagram preserves the matrix") {
  std::mt19937 rng(402);
  for (int rep = 0; rep < 40; ++rep) {
    Circuit c = testutil::random_circuit(rng, 2 + (int)(rng() % 3),
                                         1 + (int)(rng() % 8), true);
    CHECK(eval(circuit_to_diagram(c)) == circuit_matrix(c));
  }
}

TEST_CASE("iwama_commute: interacting pair expands to a sound triple") {
  Gate a{Gate::GCX, 0, {2}};
  Gate b{Gate::GCX, 1, {0, 3}};
  auto out = iwama_commute(a, b);
  REQUIRE(out.size() == 3);
  CHECK(out[2].wire == a.wire);
  CHECK(circuit_matrix(C(4, {a, b})) == circuit_matrix(C(4, out)));
}

TEST_CASE("iwama_commute: disjoint gates simply swap") {
  Gate a{Gate::GCX, 0, {2}};
  Gate b{Gate::GCX, 1, {3}};
  auto out = iwama_commute(a, b);
  REQUIRE(out.size() == 2);
  CHECK(circuit_matrix(C(4, {a, b})) == circuit_matrix(C(4, out)));
}

TEST_CASE("iwama_commute rejects clashing gates") {
  CHECK_THROWS_AS(
      iwama_commute({Gate::GCX, 0, {1}}, {Gate::GCX, 0, {2}}), CircuitError);
  CHECK_THROWS_AS(
      iwama_commute({Gate::GCX, 0, {1}}, {Gate::GCX, 1, {0}}), CircuitError);
}

TEST_CASE("circuit text format roundtrips") {
  std::string text =
      "width 3\ntof 2 0 1\ncnot 0 1\nnot 2\nket1 3\nswap 1\nbra1 0\n"
      "plus 2\ncoplus 2\ngcx 0 {1,2}\n";
  Circuit c = parse_circuit(text);
  CHECK(print_circuit(c) == print_circuit(parse_circuit(print_circuit(c))));
  CHECK_THROWS_AS(parse_circuit("width 1\nfrobnicate 0\n"), CircuitError);
  // Width inference: largest wire mentioned.
  CHECK(parse_circuit("cnot 0 2\n").width_in == 3);
}
