// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "zxand/diagram.hpp"
#include "zxand/rules.hpp"

namespace zxand {

// An occurrence of a rule instance's lhs inside a host diagram. The image
// is kind/phase/arity-exact: every half-edge of a matched host vertex is
// either consumed by an internal pattern edge or cut by a pattern boundary
// port. Cuts are recorded as (host edge index, endpoint side), the side
// that sits inside the image.
struct Match {
  const RewriteRule* rule = nullptr;
  int instance = 0;
  std::map<int, int> vertex_map; // pattern vertex id -> host vertex id

  struct Cut {
    int edge = 0;
    int side = 0; // 0 = edge.a, 1 = edge.b
  };
  std::vector<Cut> port_cuts;     // pattern inputs 0..n_in-1, then outputs
  std::vector<int> internal_edges; // host edges fully inside the image
  std::size_t host_stamp = 0;      // fingerprint for stale-match detection
};

// Structural fingerprint used to detect a host changing under a match.
std::size_t diagram_stamp(const Diagram& d);

// All occurrences of any instance of `rule` in `host`, in deterministic
// order (instances in database order; candidate vertices in id order).
// Matches are reported up to the symmetries of the IR: unordered spider
// legs and unordered And inputs yield one canonical cut assignment per
// vertex map. Patterns must contain at least one vertex.
std::vector<Match> find_matches(const RewriteRule& rule, const Diagram& host);

// Removes the matched image and glues in the instance's rhs along the cut
// points. Exact semantics preservation is asserted in assertion-enabled
// builds for hosts within the evaluation cap. Throws on a stale match.
Diagram apply(const Diagram& host, const Match& m);

struct TraceStep {
  std::string rule;          // pass name, e.g. "fusion.Z", "hopf"
  std::vector<int> vertices; // host vertex ids touched
  std::size_t v_before = 0, e_before = 0;
  std::size_t v_after = 0, e_after = 0;
};

struct SimplifyResult {
  Diagram diagram;
  std::vector<TraceStep> trace;
};

// Terminating directed simplifier. Every step strictly decreases
// (vertex count, edge count) lexicographically and preserves eval exactly;
// circle scalars are tracked in Diagram::loops. At the fixpoint the result
// has no two like-kind spiders adjacent (fusion), no spider self-loops, no
// doubly-connected copy/parity pairs (Hopf), no isolated scalar-1 or
// scalar-2 vertices, and no state-dot pairs; AND units, zeros, copies,
// deletions and assertions are absorbed.
SimplifyResult simplify(const Diagram& d);

} // namespace zxand
