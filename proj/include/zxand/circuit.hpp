// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "zxand/diagram.hpp"
#include "zxand/matrix.hpp"

namespace zxand {

// Gates of the Toffoli circuit sublanguage. GCX is the generalized
// controlled-not [target, controls]: flips the target bit iff every control
// bit is 1 (0 controls = NOT, 1 = CNOT, 2 = Toffoli). Ket1/XUnit insert a
// fresh wire at `wire` (prepared |1> resp. the unnormalized unit (1,1));
// Bra1/XCounit consume wire `wire`. Swap exchanges wires (wire, wire+1).
struct Gate {
  enum Kind { GCX, Ket1, Bra1, XUnit, XCounit, Swap } kind;
  int wire = 0;              // target for GCX; the affected wire otherwise
  std::vector<int> controls; // GCX only, sorted, excludes the target
};

// An ordered gate list with an input width; the width after each gate is
// determined by the preparations/post-selections. Gates compose
// left-to-right (diagrammatic order).
struct Circuit {
  int width_in = 0;
  std::vector<Gate> gates;
};

struct CircuitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Widths before each gate and after the last; throws on out-of-range wires.
std::vector<int> width_profile(const Circuit& c);
int width_out(const Circuit& c);

// The matrix of a single gate at the given input width, and of a circuit
// (the reversed product of its gate matrices).
NatMatrix gate_semantics(const Gate& g, int width);
NatMatrix circuit_matrix(const Circuit& c);

// Sequential and parallel composition of circuits.
Circuit circ_seq(const Circuit& a, const Circuit& b);
Circuit circ_par(const Circuit& a, const Circuit& b);
Circuit circ_id(int n);

// The commutation law for generalized controlled-nots. For an interacting
// pair a = [x,X], b = [y,Y u {x}] with x not in Y, y not in X, x != y, the
// composite a;b equals [y,X u Y];[y,Y u {x}];[x,X] (three gates). When the
// first target does not control the second gate the pair commutes outright
// and {b, a} is returned. Throws if the gates share a target or the first
// gate is controlled by the second target.
std::vector<Gate> iwama_commute(const Gate& a, const Gate& b);

// Definitional expansions of the derived gates over {GCX(<=2 ctrl), Ket1,
// Bra1, Swap}: cnot, not, ket0, bra0, tof-flip, cnot-flip, fanout.
Circuit expand_derived(const std::string& name);

// Rewrites every GCX with fewer than 2 controls into its defining
// Toffoli-with-ancilla form, leaving only primitive gates.
Circuit expand_to_primitive(const Circuit& c);

// Embedding into the diagram IR, gate by gate: GCX copies its controls with
// X spiders, conjoins the copies, and adds the product onto the target via
// a parity spider; Ket1/Bra1 are pi-phased parity states/costates;
// XUnit/XCounit are one-legged copy spiders.
Diagram circuit_to_diagram(const Circuit& c);

// Text format: one gate per line; "tof t c1 c2", "cnot t c", "not t",
// "gcx t {c1,c2,...}", "ket1 w", "bra1 w", "plus w", "coplus w", "swap w";
// '#' starts a comment. The first line may be "width n" (default 0 means
// inferred as 1 + the largest wire index mentioned).
Circuit parse_circuit(const std::string& text);
std::string print_circuit(const Circuit& c);

} // namespace zxand
