// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "helpers.hpp"
#include "zxand/eval.hpp"
#include "zxand/term.hpp"

using namespace zxand;

TEST_CASE("validate rejects dangling legs and double-used ports") {
  Diagram d;
  d.n_in = 1;
  int v = d.add_vertex({VKind::Z, 0, 2});
  d.add_edge({kInB, 0}, {v, 0});
  CHECK_THROWS_AS(validate(d), DiagramError); // leg 1 dangling
  d.add_edge({kInB, 0}, {v, 1});
  CHECK_THROWS_AS(validate(d), DiagramError); // port used twice
}

TEST_CASE("generators have the declared boundaries") {
  CHECK(gen_z(2, 3, 1).n_in == 2);
  CHECK(gen_z(2, 3, 1).n_out == 3);
  CHECK(gen_and().n_in == 2);
  CHECK(gen_and().n_out == 1);
  CHECK(gen_cup().n_in == 0);
  CHECK(gen_cup().n_out == 2);
  CHECK(gen_cap().n_in == 2);
  CHECK(gen_cap().n_out == 0);
}

TEST_CASE("interchange law holds semantically on random blocks") {
  std::mt19937 rng(101);
  for (int rep = 0; rep < 20; ++rep) {
    Diagram a = term_to_diagram(testutil::random_term(rng, 2, 1));
    Diagram b = term_to_diagram(testutil::random_term(rng, 2, 1));
    Diagram c = term_to_diagram(testutil::random_term(rng, 1, 1));
    Diagram d = term_to_diagram(testutil::random_term(rng, 1, 1));
    Diagram lhs = tensor(compose(a, b), compose(c, d));
    Diagram rhs = compose(tensor(a, c), tensor(b, d));
    CHECK(eval(lhs) == eval(rhs));
  }
}

TEST_CASE("dagger is an involution and transposes the semantics") {
  std::mt19937 rng(102);
  for (int rep = 0; rep < 20; ++rep) {
    Diagram d = testutil::random_diagram(rng, 3);
    CHECK(eval(dagger(d)) == mat_transpose(eval(d)));
    CHECK(iso_equal(dagger(dagger(d)), d));
  }
}

TEST_CASE("gen_perm realizes the permutation matrix") {
  Diagram p = gen_perm({2, 0, 1});
  NatMatrix m = eval(p);
  // output perm[i] <- input i: wire 0 -> 2, 1 -> 0, 2 -> 1.
  for (int x = 0; x < 8; ++x) {
    int b0 = (x >> 2) & 1, b1 = (x >> 1) & 1, b2 = x & 1;
    int y = (b1 << 2) | (b2 << 1) | b0;
    CHECK(m.at(y, x) == 1);
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937 rng(103);
  for (int rep = 0; rep < 20; ++rep) {
    Diagram d = testutil::random_diagram(rng, 3);
    // Relabel vertices by shifting ids.
    Diagram e;
    e.n_in = d.n_in;
    e.n_out = d.n_out;
    e.loops = d.loops;
    int shift = 100;
    for (const auto& [id, v] : d.vertices) e.vertices[id + shift] = v;
    e.next_id = d.next_id + shift;
    for (Edge ed : d.edges) {
      if (ed.a.v >= 0) ed.a.v += shift;
      if (ed.b.v >= 0) ed.b.v += shift;
      std::swap(ed.a, ed.b);
      e.edges.push_back(ed);
    }
    CHECK(iso_equal(d, e));
    CHECK(canonical_form(d) == canonical_form(e));
  }
}

TEST_CASE("print/parse: idempotent serialization and faithful roundtrip") {
  std::vector<std::string> gens = {
      "(z 1 1 pi)", "(z 2 1 0)",  "(z 0 1 0)", "(x 1 2)",  "(x 0 0)",
      "(and)",      "(cup)",      "(cap)",     "(swap)",   "(id 3)",
      "(tof)",      "(cnot)",     "(not)",     "(ket0)",   "(ket1)",
      "(bra0)",     "(bra1)",     "(plus)",    "(coplus)", "(fanout)",
      "(tri)",      "(hbox 3)"};
  for (const auto& s : gens) {
    std::string once = print_term(parse_term(s));
    CHECK(print_term(parse_term(once)) == once);
  }
  std::mt19937 rng(104);
  for (int rep = 0; rep < 100; ++rep) {
    Diagram d = testutil::random_diagram(rng, 4);
    std::string text = print_diagram(d);
    Diagram back = parse_diagram(text);
    CHECK(iso_equal(d, back));
    CHECK(print_diagram(back) == text);
  }
}

TEST_CASE("derived generator expansions evaluate to their anchors") {
  // tri = [[1,0],[1,1]]; hbox(n) entry (1,1) = n.
  NatMatrix tri = eval(term_to_diagram(parse_term("(tri)")));
  CHECK(tri.at(0, 0) == 1);
  CHECK(tri.at(0, 1) == 0);
  CHECK(tri.at(1, 0) == 1);
  CHECK(tri.at(1, 1) == 1);
  NatMatrix h3 = eval(term_to_diagram(parse_term("(hbox 3)")));
  CHECK(h3.at(0, 0) == 1);
  CHECK(h3.at(0, 1) == 1);
  CHECK(h3.at(1, 0) == 1);
  CHECK(h3.at(1, 1) == 3);
}
