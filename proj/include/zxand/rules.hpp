// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "zxand/diagram.hpp"

namespace zxand {

// One concrete lhs = rhs diagram pair; schema rules carry one instance per
// parameter assignment within the instantiation bound.
struct RuleInstance {
  std::string desc; // parameter assignment, e.g. "a=1 b=2 alpha=pi"
  Diagram lhs;
  Diagram rhs;
};

// A named equation between open diagrams. Both sides of every instance have
// equal boundary arities, and the soundness harness verifies exact matrix
// equality for each instance. instances[0] is the canonical (smallest)
// instance and serves as the pattern for the rewrite engine.
struct RewriteRule {
  std::string name;          // e.g. "ZXA.8", "TOF.14", "CNOT.4a"
  bool bidirectional = true; // equations are symmetric; expansions are not
  std::string schema_params; // human-readable parameter ranges, "" if closed
  std::vector<RuleInstance> instances;
};

// The machine-readable axiom databases. Sets: "zxa" (17 rules), "tof"
// (16 names, 18 rule objects: TOF.1 and TOF.2 have a/b variants), "cnot"
// (9 names, 11 objects: CNOT.4 and CNOT.7 have a/b variants), "lemmas"
// (derived equations: blackdot, phase-fusion-a/b, oldaxiom, whiteunit,
// cnotslide, twist, natoplus, iwama). Schema rules are instantiated with
// every parameter assignment keeping spider arities <= max_arity.
std::vector<RewriteRule> axiom_db(const std::string& set, int max_arity = 3);

// A single like-spider fusion instance: two `kind` spiders with a/b free
// inputs/outputs and c/d free inputs/outputs, joined by `edges` internal
// edges, against the fused spider with XORed phase. Exposed so tests can
// spot-check arities beyond the default bound.
RuleInstance fusion_instance(VKind kind, int a, int b, int c, int d,
                             int edges, int p1, int p2);

struct InstanceReport {
  enum Status { Pass, Fail, Skipped } status;
  std::string desc;
  std::string detail; // first differing entry on Fail; reason on Skipped
};

struct SoundnessReport {
  std::string rule;
  bool pass = true; // all non-skipped instances pass (dagger-closed)
  std::vector<InstanceReport> instances;
};

// Verifies eval(lhs) = eval(rhs) for every instance, and the same for the
// daggered sides (dagger closure). Instances that exceed the resource cap
// are reported as Skipped and do not fail the rule.
SoundnessReport check_soundness(const RewriteRule& rule);

// check_soundness over a whole database, in database order.
std::vector<SoundnessReport> check_all(const std::vector<RewriteRule>& db);

} // namespace zxand
