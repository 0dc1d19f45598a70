// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>
#include <vector>

#include "zxand/diagram.hpp"
#include "zxand/matrix.hpp"

namespace zxand {

// Boolean function of `vars` inputs as an explicit value table. values[a]
// is the output at assignment a, where variable v is the bit of a with
// significance vars-1-v (variable 0 is the most significant bit, matching
// the wire convention).
struct TruthTable {
  int vars = 0;
  std::vector<int> values; // length 2^vars, entries 0/1
};

// Algebraic normal form: XOR over monomials, each monomial the AND of a
// variable subset; the empty subset is the constant-1 term.
struct AnfPolynomial {
  int vars = 0;
  std::set<std::set<int>> monomials;
};

// Unique ANF of a truth table, by the subset Moebius (XOR) transform.
// Round trip: anf_evaluate(anf(t), a) == t.values[a] for every a.
AnfPolynomial anf(const TruthTable& t);
int anf_evaluate(const AnfPolynomial& p, std::uint64_t assignment);

// Diagram realizing a tuple of ANF polynomials over the same variables as
// a k-input, |polys|-output function diagram. Each input is copied by an
// X spider once per monomial occurrence (an unused variable is terminated
// by the X counit); each monomial of two or more variables is a
// left-combed AND tree; each output is a Z spider XORing its monomials,
// with the constant-1 term absorbed as a pi phase. eval gives the
// function's 0/1 matrix. Throws DiagramError on an empty polynomial list
// or mixed variable counts.
Diagram anf_to_diagram(const std::vector<AnfPolynomial>& polys);

// Exact synthesis: a diagram whose eval equals the given matrix.
// Construction: enumerate the apex a = 0..s-1 as the multiset of (x, y)
// with multiplicity m[y][x] in row-major order; prepare the uniform state
// on K = ceil(log2(max(s, 1))) wires from X units; copy each wire three
// ways into the leg functions F: a -> x and G: a -> y and the domain
// predicate chi(a) = [a < s], each synthesized through anf; post-select
// chi's output with the Z(pi) costate; bend F's outputs into the
// diagram's inputs with caps. Handles s = 0 (zero matrix) and s = 1
// (K = 0). Throws MatrixError on non-power-of-two dimensions.
Diagram matrix_to_diagram(const NatMatrix& m);

} // namespace zxand
