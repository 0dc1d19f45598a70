// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>

#include "zxand/diagram.hpp"
#include "zxand/matrix.hpp"

namespace zxand {

// A multiset span between finite ordinals of power-of-two size: the apex is
// a multiset of pairs (x < left, y < right) stored as multiplicities.
struct Span {
  std::int64_t left = 1;
  std::int64_t right = 1;
  std::map<std::pair<std::int64_t, std::int64_t>, Nat> apex;

  friend bool operator==(const Span&, const Span&) = default;
};

Span span_identity(std::int64_t n);
// Pullback composition over the shared middle ordinal (f then g).
Span span_compose(const Span& f, const Span& g);
// Cartesian-product tensor with big-endian index arithmetic.
Span span_tensor(const Span& f, const Span& g);

NatMatrix span_to_matrix(const Span& s);
Span matrix_to_span(const NatMatrix& m);

// Independent oracle semantics: translates each generator to its span and
// folds span_compose/span_tensor over a sequential/parallel decomposition
// of the open graph. Agrees with eval through span_to_matrix.
Span eval_span(const Diagram& d);

// True iff both apex legs are monic and all multiplicities are 1; the
// span presents a partial isomorphism.
bool span_is_partial_iso(const Span& s);

} // namespace zxand
