// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "zxand/circuit.hpp"
#include "zxand/diagram.hpp"

namespace zxand {

// Interpretation of diagrams as Toffoli circuits with adjoined X-units and
// X-counits. Generator images: the Z-comultiplication becomes a CNOT whose
// control is prepared with an X-unit; the Z-unit becomes |0>; the pi phase
// becomes NOT; the X-comultiplication becomes a CNOT onto a |0>-prepared
// target; AND becomes a Toffoli onto a |0> ancilla below the inputs with
// the copied inputs discarded by X-counits; daggered generators are
// mirrored. Spiders of other arities are split into left-combed chains of
// these images. Semantics is preserved exactly:
// circuit_matrix(zx_to_tofhat(d)) = eval(d).
Circuit zx_to_tofhat(const Diagram& d);

// Interpretation of primitive Toffoli circuits as diagrams: the Toffoli
// copies both controls with X spiders, conjoins the copies, and XORs the
// product onto the target with a Z spider; |1> and <1| become pi-phased Z
// states/costates; X-units/counits become one-legged X spiders. Throws
// CircuitError on a generalized controlled-not with fewer than two
// controls (expand derived gates first).
Diagram tofhat_to_zx(const Circuit& c);

struct RoundtripReport {
  bool semantic_equal = false;    // must hold
  bool syntactic_identity = false; // best-effort, after simplification
};

// d -> zx_to_tofhat -> expand_to_primitive -> tofhat_to_zx; semantic
// equality of eval, plus whether simplify reduces both sides to isomorphic
// diagrams.
RoundtripReport roundtrip_zx(const Diagram& d);

// c -> tofhat_to_zx -> zx_to_tofhat; semantic equality of circuit_matrix,
// plus whether the primitive gate lists coincide syntactically.
RoundtripReport roundtrip_tof(const Circuit& c);

} // namespace zxand
