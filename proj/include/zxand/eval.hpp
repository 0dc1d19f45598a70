// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

#include "zxand/diagram.hpp"
#include "zxand/matrix.hpp"

namespace zxand {

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Boundary-wire cap for evaluation; ZXAND_MAX_WIRES overrides.
int max_wires();

// Exact matrix semantics by sparse contraction over internal edges. Spiders
// of arity > 3 are split into chains of arity-3 nodes (sound by fusion), so
// no dense 2^arity tensor is ever formed. Wire 0 is the most significant
// bit of the row/column index; each vertex-free closed circle contributes
// the scalar 2. Throws ResourceError past the wire cap.
NatMatrix eval(const Diagram& d);

// Closed-form generator matrices (same convention); used by tests as an
// anchor independent of the contraction path.
NatMatrix gen_matrix_z(int n, int m, int phase);
NatMatrix gen_matrix_x(int n, int m);
NatMatrix gen_matrix_and();
NatMatrix gen_matrix_swap();
NatMatrix gen_matrix_cup();
NatMatrix gen_matrix_cap();

// True iff both diagrams have the same boundary arities and exactly equal
// matrix semantics (sound and complete for provable equality).
bool decide_eq(const Diagram& a, const Diagram& b);

} // namespace zxand
