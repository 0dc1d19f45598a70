// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one pass/fail line per criterion, exact arithmetic, no
// tolerances. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "zxand/circuit.hpp"
#include "zxand/eval.hpp"
#include "zxand/rewrite.hpp"
#include "zxand/rules.hpp"
#include "zxand/span.hpp"
#include "zxand/synth.hpp"
#include "zxand/term.hpp"
#include "zxand/translate.hpp"

using namespace zxand;

namespace {

int failures = 0;

void report(int n, const char* what, bool ok, double secs) {
  std::printf("%s %d %s (%.2fs)\n", ok ? "PASS" : "FAIL", n, what, secs);
  if (!ok) ++failures;
}

template <typename F>
void criterion(int n, const char* what, F f) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = f();
  } catch (const std::exception& e) {
    std::printf("  exception: %s\n", e.what());
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  report(n, what, ok, secs);
}

const std::vector<std::string> kZxGenerators = {
    "(z 1 1 pi)", "(z 2 1 0)", "(z 1 2 0)", "(z 0 1 0)", "(z 1 0 0)",
    "(z 0 1 pi)", "(z 1 0 pi)", "(x 1 2)", "(x 2 1)", "(x 0 1)", "(x 1 0)",
    "(and)", "(cup)", "(cap)", "(swap)", "(id 1)"};

const std::vector<Circuit> kTofGenerators = {
    {3, {{Gate::GCX, 2, {0, 1}}}}, {1, {{Gate::Ket1, 1, {}}}},
    {1, {{Gate::Bra1, 0, {}}}},    {0, {{Gate::XUnit, 0, {}}}},
    {1, {{Gate::XCounit, 0, {}}}}, {2, {{Gate::Swap, 0, {}}}}};

bool axiom_soundness() {
  for (const char* set : {"zxa", "tof", "cnot", "lemmas"})
    for (const auto& rep : check_all(axiom_db(set)))
      if (!rep.pass) {
        std::printf("  rule %s failed\n", rep.rule.c_str());
        return false;
      }
  return true;
}

bool functor_preservation() {
  for (const auto& s : kZxGenerators) {
    Diagram d = term_to_diagram(parse_term(s));
    if (circuit_matrix(zx_to_tofhat(d)) != eval(d)) return false;
  }
  for (const auto& c : kTofGenerators)
    if (eval(tofhat_to_zx(expand_to_primitive(c))) != circuit_matrix(c))
      return false;
  std::mt19937 rng(9001);
  for (int rep = 0; rep < 100; ++rep) {
    Diagram d = testutil::random_diagram(rng, 4); // <= 12 vertices
    if (circuit_matrix(zx_to_tofhat(d)) != eval(d)) return false;
  }
  for (int rep = 0; rep < 100; ++rep) {
    Circuit c = expand_to_primitive(testutil::random_circuit(
        rng, 2 + (int)(rng() % 3), 1 + (int)(rng() % 12), true));
    if (eval(tofhat_to_zx(c)) != circuit_matrix(c)) return false;
  }
  return true;
}

bool roundtrip_isomorphism() {
  for (const auto& s : kZxGenerators)
    if (!roundtrip_zx(term_to_diagram(parse_term(s))).semantic_equal)
      return false;
  if (!roundtrip_zx(dagger(gen_and())).semantic_equal) return false;
  for (const auto& c : kTofGenerators)
    if (!roundtrip_tof(c).semantic_equal) return false;
  return true;
}

bool span_equivalence() {
  std::mt19937 rng(9004);
  for (int rep = 0; rep < 300; ++rep) {
    Diagram d = testutil::random_diagram(rng, 4);
    if (span_to_matrix(eval_span(d)) != eval(d)) return false;
  }
  for (int rep = 0; rep < 100; ++rep) {
    int n = 1 + (int)(rng() % 3);
    Diagram a = term_to_diagram(testutil::random_term(rng, n, 2));
    Diagram b = term_to_diagram(testutil::random_term(rng, n, 2));
    if (span_to_matrix(span_compose(eval_span(a), eval_span(b))) !=
        mat_mul(eval(b), eval(a)))
      return false;
    if (span_to_matrix(span_tensor(eval_span(a), eval_span(b))) !=
        mat_kron(eval(a), eval(b)))
      return false;
  }
  return true;
}

bool partial_isomorphism() {
  std::mt19937 rng(9005);
  for (int rep = 0; rep < 100; ++rep) {
    // Unit/counit-free: GCX, Swap, Ket1, Bra1 only.
    Circuit c = testutil::random_circuit(rng, 2 + (int)(rng() % 3),
                                         1 + (int)(rng() % 10), true);
    Classification cl = classify(circuit_matrix(c));
    if (!(cl.zero_one && cl.at_most_one_per_col && cl.at_most_one_per_row))
      return false;
  }
  for (int rep = 0; rep < 100; ++rep) {
    // Ancilla-free: GCX and Swap only, fixed width.
    Circuit c = testutil::random_circuit(rng, 2 + (int)(rng() % 3),
                                         1 + (int)(rng() % 10), false);
    if (classify(circuit_matrix(c)).tightest != MapClass::Bijection)
      return false;
  }
  return true;
}

bool universality() {
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
          if (eval(matrix_to_diagram(m)) != m) return false;
        }
  std::mt19937 rng(9006);
  for (int rep = 0; rep < 50; ++rep) {
    NatMatrix m;
    m.rows = std::int64_t{1} << (rng() % 3);
    m.cols = std::int64_t{1} << (rng() % 3);
    for (std::int64_t r = 0; r < m.rows; ++r)
      for (std::int64_t c = 0; c < m.cols; ++c) m.add(r, c, (int)(rng() % 4));
    if (eval(matrix_to_diagram(m)) != m) return false;
  }
  return true;
}

bool rewriting_safety() {
  // Each apply() additionally asserts semantics preservation internally
  // (assertions are enabled in the build).
  std::mt19937 rng(9007);
  for (int rep = 0; rep < 100; ++rep) {
    Diagram d = testutil::random_diagram(rng, 4);
    SimplifyResult r = simplify(d);
    if (eval(r.diagram) != eval(d)) return false;
    for (const auto& s : r.trace)
      if (!(s.v_after < s.v_before ||
            (s.v_after == s.v_before && s.e_after < s.e_before)))
        return false;
  }
  return true;
}

bool iwama_law() {
  const int w = 4;
  for (int x = 0; x < w; ++x)
    for (int y = 0; y < w; ++y) {
      if (x == y) continue;
      // Free wires for the control sets, excluding x and y.
      std::vector<int> rest;
      for (int i = 0; i < w; ++i)
        if (i != x && i != y) rest.push_back(i);
      int r = (int)rest.size();
      for (int mx = 0; mx < (1 << r); ++mx)
        for (int my = 0; my < (1 << r); ++my) {
          std::vector<int> X, Yx;
          for (int i = 0; i < r; ++i)
            if (mx & (1 << i)) X.push_back(rest[i]);
          for (int i = 0; i < r; ++i)
            if (my & (1 << i)) Yx.push_back(rest[i]);
          Yx.push_back(x);
          std::sort(Yx.begin(), Yx.end());
          Gate a{Gate::GCX, x, X};
          Gate b{Gate::GCX, y, Yx};
          auto out = iwama_commute(a, b);
          if (out.size() != 3) return false;
          if (circuit_matrix({w, {a, b}}) != circuit_matrix({w, out}))
            return false;
        }
    }
  return true;
}

bool big_numbers() {
  Diagram pair = compose(gen_x(0, 1), gen_x(1, 0));
  Diagram d = gen_id(0);
  for (int i = 0; i < 80; ++i) d = tensor(d, pair);
  return eval(d).at(0, 0) == Nat(1) << 80;
}

} // namespace

int main() {
  criterion(1, "axiom soundness across all rule databases", axiom_soundness);
  criterion(2, "interpretation functors preserve semantics",
            functor_preservation);
  criterion(3, "roundtrip isomorphism, semantic form", roundtrip_isomorphism);
  criterion(4, "span backend equivalent to matrix backend", span_equivalence);
  criterion(5, "circuits classify as partial isomorphisms",
            partial_isomorphism);
  criterion(6, "universality: synthesis inverts evaluation", universality);
  criterion(7, "rewriting preserves semantics with decreasing measure",
            rewriting_safety);
  criterion(8, "generalized controlled-not commutation law", iwama_law);
  criterion(9, "exact arithmetic at 2^80", big_numbers);
  return failures == 0 ? 0 : 1;
}
