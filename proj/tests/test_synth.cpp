// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "zxand/eval.hpp"
#include "zxand/synth.hpp"

using namespace zxand;

TEST_CASE("Moebius transform anchors") {
  CHECK(anf({2, {0, 0, 0, 1}}).monomials == std::set<std::set<int>>{{0, 1}});
  CHECK(anf({2, {0, 1, 1, 0}}).monomials ==
        std::set<std::set<int>>{{0}, {1}});
  CHECK(anf({2, {0, 1, 1, 1}}).monomials ==
        std::set<std::set<int>>{{0}, {1}, {0, 1}});
  CHECK(anf({0, {1}}).monomials == std::set<std::set<int>>{{}});
  CHECK(anf({0, {0}}).monomials.empty());
  CHECK_THROWS_AS(anf({2, {0, 1}}), DiagramError);
}

TEST_CASE("anf roundtrips against table evaluation exhaustively for k <= 4") {
  std::mt19937 rng(701);
  for (int k = 0; k <= 4; ++k) {
    int reps = k <= 2 ? (1 << (1 << k)) : 64; // exhaustive up to k=2
    for (int rep = 0; rep < reps; ++rep) {
      TruthTable t;
      t.vars = k;
      t.values.resize(std::size_t{1} << k);
      for (std::size_t a = 0; a < t.values.size(); ++a)
        t.values[a] = k <= 2 ? (rep >> a) & 1 : (int)(rng() % 2);
      AnfPolynomial p = anf(t);
      for (std::size_t a = 0; a < t.values.size(); ++a)
        CHECK(anf_evaluate(p, a) == t.values[a]);
    }
  }
}

TEST_CASE("anf_to_diagram realizes the Boolean function matrix") {
  AnfPolynomial andp{2, {{0, 1}}};
  CHECK(decide_eq(anf_to_diagram({andp}), gen_and()));
  AnfPolynomial idp{1, {{0}}};
  CHECK(decide_eq(anf_to_diagram({idp, idp}), gen_x(1, 2)));
  // Constant 1 with the input discarded by the X counit.
  AnfPolynomial cst{1, {{}}};
  NatMatrix e = eval(anf_to_diagram({cst}));
  NatMatrix want;
  want.rows = 2;
  want.cols = 2;
  want.add(1, 0, 1);
  want.add(1, 1, 1);
  CHECK(e == want);
  CHECK_THROWS_AS(anf_to_diagram({}), DiagramError);
  CHECK_THROWS_AS(anf_to_diagram({andp, idp}), DiagramError);
}

TEST_CASE("discarded variables never double entries") {
  // f(x0, x1) = x1 ignores x0; every entry of the 2x4 matrix must be 0/1.
  AnfPolynomial p{2, {{1}}};
  NatMatrix e = eval(anf_to_diagram({p}));
  CHECK(e.rows == 2);
  CHECK(e.cols == 4);
  for (const auto& [rc, v] : e.entries) CHECK(v == 1);
}

TEST_CASE("matrix_to_diagram inverts eval on small exhaustive families") {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          NatMatrix m;
          m.rows = m.cols = 2;
          m.add(0, 0, a);
          m.add(0, 1, b);
          m.add(1, 0, c);
          m.add(1, 1, d);
          CHECK(eval(matrix_to_diagram(m)) == m);
        }
}

TEST_CASE("matrix_to_diagram edge shapes") {
  for (int v = 0; v < 5; ++v) {
    NatMatrix m; // 1x1 scalar, including the empty apex
    m.add(0, 0, v);
    CHECK(eval(matrix_to_diagram(m)) == m);
  }
  NatMatrix wide; // 1x8 row
  wide.rows = 1;
  wide.cols = 8;
  wide.add(0, 5, 2);
  wide.add(0, 0, 1);
  CHECK(eval(matrix_to_diagram(wide)) == wide);
  NatMatrix tall = mat_transpose(wide);
  CHECK(eval(matrix_to_diagram(tall)) == tall);
  NatMatrix bad;
  bad.rows = 3;
  bad.cols = 2;
  CHECK_THROWS_AS(matrix_to_diagram(bad), MatrixError);
}

TEST_CASE("matrix_to_diagram on random matrices") {
  std::mt19937 rng(702);
  for (int rep = 0; rep < 50; ++rep) {
    NatMatrix m;
    m.rows = std::int64_t{1} << (rng() % 3);
    m.cols = std::int64_t{1} << (rng() % 3);
    for (std::int64_t r = 0; r < m.rows; ++r)
      for (std::int64_t c = 0; c < m.cols; ++c) m.add(r, c, (int)(rng() % 4));
    CHECK(eval(matrix_to_diagram(m)) == m);
  }
}
