// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "helpers.hpp"
#include "zxand/eval.hpp"
#include "zxand/rewrite.hpp"
#include "zxand/rules.hpp"
#include "zxand/term.hpp"

using namespace zxand;

namespace {

const RewriteRule& rule_named(const std::vector<RewriteRule>& db,
                              const std::string& name) {
  for (const auto& r : db)
    if (r.name == name) return r;
  throw std::runtime_error("no rule " + name);
}

bool no_like_kind_adjacency(const Diagram& d) {
  for (const Edge& e : d.edges) {
    if (e.a.v < 0 || e.b.v < 0) continue;
    const Vertex& a = d.vertices.at(e.a.v);
    const Vertex& b = d.vertices.at(e.b.v);
    if (a.kind == b.kind && a.kind != VKind::And && e.a.v != e.b.v)
      return false;
  }
  return true;
}

bool no_spider_self_loops(const Diagram& d) {
  for (const Edge& e : d.edges)
    if (e.a.v >= 0 && e.a.v == e.b.v &&
        d.vertices.at(e.a.v).kind != VKind::And)
      return false;
  return true;
}

} // namespace

TEST_CASE("dot elimination matches twice and applies soundly") {
  auto db = axiom_db("zxa");
  const RewriteRule& dot = rule_named(db, "ZXA.7");
  // Two scalar dots side by side.
  Diagram host = tensor(term_to_diagram(parse_term("(seq (z 0 1 0) (x 1 0))")),
                        term_to_diagram(parse_term("(seq (z 0 1 0) (x 1 0))")));
  auto ms = find_matches(dot, host);
  CHECK(ms.size() == 2);
  Diagram once = apply(host, ms[0]);
  CHECK(eval(once) == eval(host));
  CHECK(once.vertices.size() == 2);
}

TEST_CASE("a stale match is rejected") {
  auto db = axiom_db("zxa");
  const RewriteRule& dot = rule_named(db, "ZXA.7");
  Diagram host = term_to_diagram(parse_term("(seq (z 0 1 0) (x 1 0))"));
  auto ms = find_matches(dot, host);
  REQUIRE(!ms.empty());
  Diagram changed = tensor(host, gen_id(1));
  CHECK_THROWS_AS(apply(changed, ms[0]), DiagramError);
}

TEST_CASE("fusion match rewrites a pi-pi pair to a blank spider") {
  auto db = axiom_db("zxa");
  const RewriteRule& fuse = rule_named(db, "ZXA.1");
  Diagram host =
      term_to_diagram(parse_term("(seq (z 1 1 pi) (z 1 1 pi))"));
  bool found = false;
  for (const auto& m : find_matches(fuse, host)) {
    Diagram out = apply(host, m);
    if (eval(out) == eval(host)) found = true;
  }
  CHECK(found);
}

TEST_CASE("simplify reaches the documented fixpoint shape") {
  std::mt19937 rng(501);
  for (int rep = 0; rep < 100; ++rep) {
    Diagram d = testutil::random_diagram(rng, 4);
    SimplifyResult r = simplify(d);
    CHECK(eval(r.diagram) == eval(d));
    CHECK(no_like_kind_adjacency(r.diagram));
    CHECK(no_spider_self_loops(r.diagram));
    // Strictly decreasing (V, E) lexicographic measure along the trace.
    for (const auto& s : r.trace) {
      bool dec = s.v_after < s.v_before ||
                 (s.v_after == s.v_before && s.e_after < s.e_before);
      CHECK(dec);
    }
  }
}

TEST_CASE("simplify absorbs scalars into loops") {
  // cup;cap is the scalar 2: one loop, no vertices.
  Diagram circle = compose(gen_cup(), gen_cap());
  SimplifyResult r = simplify(circle);
  CHECK(r.diagram.vertices.empty());
  CHECK(r.diagram.loops == 1);
  // A closed blank parity spider is the scalar 1 and vanishes entirely.
  Diagram one = term_to_diagram(parse_term("(seq (z 0 1 0) (z 1 0 0))"));
  r = simplify(one);
  CHECK(r.diagram.vertices.empty());
  CHECK(r.diagram.loops == 0);
}

TEST_CASE("simplify is idempotent") {
  std::mt19937 rng(502);
  for (int rep = 0; rep < 25; ++rep) {
    Diagram d = testutil::random_diagram(rng, 3);
    Diagram once = simplify(d).diagram;
    SimplifyResult again = simplify(once);
    CHECK(again.trace.empty());
    CHECK(iso_equal(again.diagram, once));
  }
}
