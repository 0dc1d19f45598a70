// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "zxand/eval.hpp"
#include "zxand/rules.hpp"

using namespace zxand;

TEST_CASE("database cardinalities") {
  CHECK(axiom_db("zxa").size() == 17);
  CHECK(axiom_db("tof").size() == 18);  // 16 names, a/b variants for 1 and 2
  CHECK(axiom_db("cnot").size() == 11); // 9 names, a/b variants for 4 and 7
  CHECK(axiom_db("lemmas").size() == 9);
  CHECK_THROWS_AS(axiom_db("nope"), DiagramError);
}

TEST_CASE("every rule instance is sound, dagger-closed") {
  for (const char* set : {"zxa", "tof", "cnot", "lemmas"}) {
    for (const auto& rep : check_all(axiom_db(set))) {
      INFO(set << " " << rep.rule);
      CHECK(rep.pass);
      for (const auto& inst : rep.instances) {
        INFO(inst.desc << " " << inst.detail);
        CHECK(inst.status != InstanceReport::Fail);
      }
    }
  }
}

TEST_CASE("rule sides have matching boundaries") {
  for (const char* set : {"zxa", "tof", "cnot", "lemmas"})
    for (const auto& rule : axiom_db(set))
      for (const auto& inst : rule.instances) {
        INFO(rule.name << " " << inst.desc);
        CHECK(inst.lhs.n_in == inst.rhs.n_in);
        CHECK(inst.lhs.n_out == inst.rhs.n_out);
      }
}

TEST_CASE("fusion holds beyond the default instantiation bound") {
  // Arity-5 spiders joined by one edge, all phase combinations.
  for (int p1 = 0; p1 <= 1; ++p1)
    for (int p2 = 0; p2 <= 1; ++p2) {
      RuleInstance f = fusion_instance(VKind::Z, 2, 2, 2, 2, 1, p1, p2);
      CHECK(eval(f.lhs) == eval(f.rhs));
    }
  // Copy spiders fused across several parallel edges.
  for (int edges = 1; edges <= 3; ++edges) {
    RuleInstance f = fusion_instance(VKind::X, 2, 1, 1, 2, edges, 0, 0);
    CHECK(eval(f.lhs) == eval(f.rhs));
  }
}

TEST_CASE("schema instantiation respects the arity bound") {
  // Raising the bound adds instances to at least the fusion schema.
  auto small = axiom_db("zxa", 3).front().instances.size();
  auto large = axiom_db("zxa", 4).front().instances.size();
  CHECK(large > small);
}
