// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "helpers.hpp"
#include "zxand/eval.hpp"
#include "zxand/span.hpp"
#include "zxand/term.hpp"

using namespace zxand;

TEST_CASE("span backend agrees with the matrix backend") {
  std::mt19937 rng(301);
  for (int rep = 0; rep < 100; ++rep) {
    Diagram d = testutil::random_diagram(rng, 4);
    CHECK(span_to_matrix(eval_span(d)) == eval(d));
  }
}

TEST_CASE("span composition and tensor transport to product and Kronecker") {
  std::mt19937 rng(302);
  for (int rep = 0; rep < 30; ++rep) {
    int n = 1 + static_cast<int>(rng() % 3);
    Diagram a = term_to_diagram(testutil::random_term(rng, n, 2));
    Diagram b = term_to_diagram(testutil::random_term(rng, n, 2));
    Span sa = eval_span(a), sb = eval_span(b);
    CHECK(span_to_matrix(span_compose(sa, sb)) == mat_mul(eval(b), eval(a)));
    CHECK(span_to_matrix(span_tensor(sa, sb)) == mat_kron(eval(a), eval(b)));
  }
}

TEST_CASE("matrix_to_span is a section of span_to_matrix") {
  std::mt19937 rng(303);
  for (int rep = 0; rep < 30; ++rep) {
    NatMatrix m;
    m.rows = std::int64_t{1} << (rng() % 3);
    m.cols = std::int64_t{1} << (rng() % 3);
    for (std::int64_t r = 0; r < m.rows; ++r)
      for (std::int64_t c = 0; c < m.cols; ++c)
        m.add(r, c, static_cast<int>(rng() % 3));
    CHECK(span_to_matrix(matrix_to_span(m)) == m);
  }
}

TEST_CASE("partial isomorphism iff the matrix classifies at least as a "
          "partial injection") {
  std::mt19937 rng(304);
  for (int rep = 0; rep < 60; ++rep) {
    Diagram d = testutil::random_diagram(rng, 3);
    Span s = eval_span(d);
    Classification c = classify(span_to_matrix(s));
    bool piso = c.zero_one && c.at_most_one_per_col && c.at_most_one_per_row;
    CHECK(span_is_partial_iso(s) == piso);
  }
  CHECK(span_is_partial_iso(eval_span(gen_swap())));
  CHECK(span_is_partial_iso(eval_span(gen_x(1, 2)))); // both legs monic
  CHECK_FALSE(span_is_partial_iso(eval_span(compose(gen_cup(), gen_cap()))));
}
