// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "zxand/diagram.hpp"

namespace zxand {

// Syntax tree for the textual s-expression grammar. Primitive generator
// terms correspond one-to-one to the gen_* constructors; derived names
// (tof, cnot, not, ket0/ket1/bra0/bra1, plus/coplus, fanout, tri, hbox n)
// are expanded structurally before a Diagram is built.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum Kind { Z, X, And, Id, Swap, Cup, Cap, Seq, Par } kind;
  int n = 0, m = 0, phase = 0; // Z/X arities+phase; Id uses n
  std::vector<TermPtr> kids;   // Seq/Par children (>= 2)
};

TermPtr t_z(int n, int m, int phase);
TermPtr t_x(int n, int m);
TermPtr t_and();
TermPtr t_id(int n);
TermPtr t_swap();
TermPtr t_cup();
TermPtr t_cap();
TermPtr t_seq(std::vector<TermPtr> kids);
TermPtr t_par(std::vector<TermPtr> kids);
// A wire permutation as a term (decomposed into adjacent swaps):
// output perm[i] receives input i.
TermPtr t_perm(const std::vector<int>& perm);

// Boundary arities of a term; throws DiagramError on seq arity mismatch.
std::pair<int, int> term_arity(const TermPtr& t);

Diagram term_to_diagram(const TermPtr& t);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses the textual grammar (with derived generator names) to a term over
// primitives only, or all the way to a diagram.
TermPtr parse_term(const std::string& text);
Diagram parse_diagram(const std::string& text);

// Serializes a term; print_diagram extracts a term first. The composite
// parse(print(d)) is graph-isomorphic to d.
std::string print_term(const TermPtr& t);
std::string print_diagram(const Diagram& d);

// Extracts a sequential/parallel decomposition of an open graph: processes
// vertices in id order against a frontier of half-edges, routing with
// swaps and bending legs with cups/caps as needed. Every diagram admits one.
TermPtr diagram_to_term(const Diagram& d);

// Expansions of the named derived generators as primitive terms.
TermPtr derived_term(const std::string& name, int param = 0);

} // namespace zxand
