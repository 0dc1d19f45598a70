// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include "zxand/rules.hpp"

#include <sstream>

#include "zxand/circuit.hpp"
#include "zxand/eval.hpp"
#include "zxand/term.hpp"

namespace zxand {

namespace {

Diagram td(const std::string& s) { return term_to_diagram(parse_term(s)); }

RuleInstance inst(const std::string& desc, Diagram lhs, Diagram rhs) {
  return {desc, std::move(lhs), std::move(rhs)};
}

RewriteRule closed_rule(const std::string& name, const std::string& lhs,
                        const std::string& rhs) {
  RewriteRule r;
  r.name = name;
  r.instances.push_back(inst("", td(lhs), td(rhs)));
  return r;
}

RewriteRule circ_rule(const std::string& name, const Circuit& lhs,
                      const Circuit& rhs) {
  RewriteRule r;
  r.name = name;
  r.instances.push_back(
      inst("", circuit_to_diagram(lhs), circuit_to_diagram(rhs)));
  return r;
}

Circuit C(int w, std::vector<Gate> gs) { return {w, std::move(gs)}; }
Gate T(int t, std::vector<int> cs) { return {Gate::GCX, t, std::move(cs)}; }
Gate K1(int w) { return {Gate::Ket1, w, {}}; }
Gate B1(int w) { return {Gate::Bra1, w, {}}; }

// Left-combed AND tree over n >= 2 inputs: conjoins the top two wires first.
TermPtr left_comb(int n) {
  return n == 2 ? t_and()
                : t_seq({t_par({t_and(), t_id(n - 2)}), left_comb(n - 1)});
}

// Right-combed AND tree: conjoins the bottom two wires first.
TermPtr right_comb(int n) {
  return n == 2 ? t_and()
                : t_seq({t_par({t_id(n - 2), t_and()}), right_comb(n - 1)});
}

} // namespace

RuleInstance fusion_instance(VKind kind, int a, int b, int c, int d,
                             int edges, int p1, int p2) {
  Diagram lhs;
  lhs.n_in = a + c;
  lhs.n_out = b + d;
  int v1 = lhs.add_vertex({kind, p1, a + b + edges});
  int v2 = lhs.add_vertex({kind, p2, c + d + edges});
  int l1 = 0, l2 = 0;
  for (int i = 0; i < a; ++i) lhs.add_edge({kInB, i}, {v1, l1++});
  for (int i = 0; i < b; ++i) lhs.add_edge({v1, l1++}, {kOutB, i});
  for (int i = 0; i < c; ++i) lhs.add_edge({kInB, a + i}, {v2, l2++});
  for (int i = 0; i < d; ++i) lhs.add_edge({v2, l2++}, {kOutB, b + i});
  for (int e = 0; e < edges; ++e) lhs.add_edge({v1, l1++}, {v2, l2++});

  Diagram rhs;
  rhs.n_in = a + c;
  rhs.n_out = b + d;
  int v = rhs.add_vertex({kind, (p1 + p2) % 2, a + b + c + d});
  int l = 0;
  for (int i = 0; i < a + c; ++i) rhs.add_edge({kInB, i}, {v, l++});
  for (int i = 0; i < b + d; ++i) rhs.add_edge({v, l++}, {kOutB, i});

  std::ostringstream os;
  os << "a=" << a << " b=" << b << " c=" << c << " d=" << d;
  if (edges != 1) os << " k=" << edges;
  if (kind == VKind::Z)
    os << " alpha=" << (p1 ? "pi" : "0") << " beta=" << (p2 ? "pi" : "0");
  return inst(os.str(), std::move(lhs), std::move(rhs));
}

namespace {

// Z-spider fusion along one edge, phases adding mod 2pi.
RewriteRule zxa1(int bound) {
  RewriteRule r;
  r.name = "ZXA.1";
  r.schema_params = "a,b,c,d >= 0 with a+b+1, c+d+1 <= max_arity; "
                    "alpha,beta in {0,pi}";
  for (int a = 0; a + 1 <= bound; ++a)
    for (int b = 0; a + b + 1 <= bound; ++b)
      for (int c = 0; c + 1 <= bound; ++c)
        for (int d = 0; c + d + 1 <= bound; ++d)
          for (int p1 = 0; p1 < 2; ++p1)
            for (int p2 = 0; p2 < 2; ++p2)
              r.instances.push_back(
                  fusion_instance(VKind::Z, a, b, c, d, 1, p1, p2));
  return r;
}

// Crossing two output legs of a parity spider changes nothing.
RewriteRule zxa2(int bound) {
  RewriteRule r;
  r.name = "ZXA.2";
  r.schema_params = "a in 0..max_arity-2; alpha in {0,pi}";
  for (int a = 0; a + 2 <= bound; ++a)
    for (int p = 0; p < 2; ++p) {
      std::string z = "(z " + std::to_string(a) + " 2 " + (p ? "pi" : "0") +
                      ")";
      r.instances.push_back(inst(
          "a=" + std::to_string(a) + " alpha=" + (p ? "pi" : "0"),
          td("(seq " + z + " (swap))"), td(z)));
    }
  return r;
}

// X-spider fusion along k >= 1 edges (exact: all connected legs carry the
// same value, so extra edges are redundant).
RewriteRule zxa3(int bound) {
  RewriteRule r;
  r.name = "ZXA.3";
  r.schema_params =
      "a,b,c,d >= 0, k >= 1 with a+b+k, c+d+k <= max_arity";
  for (int k = 1; k <= bound; ++k)
    for (int a = 0; a + k <= bound; ++a)
      for (int b = 0; a + b + k <= bound; ++b)
        for (int c = 0; c + k <= bound; ++c)
          for (int d = 0; c + d + k <= bound; ++d)
            r.instances.push_back(
                fusion_instance(VKind::X, a, b, c, d, k, 0, 0));
  return r;
}

// Crossing two output legs of a copy spider changes nothing.
RewriteRule zxa4(int bound) {
  RewriteRule r;
  r.name = "ZXA.4";
  r.schema_params = "a in 0..max_arity-2";
  for (int a = 0; a + 2 <= bound; ++a) {
    std::string x = "(x " + std::to_string(a) + " 2)";
    r.instances.push_back(inst("a=" + std::to_string(a),
                               td("(seq " + x + " (swap))"), td(x)));
  }
  return r;
}

// AND-tree reassociation: left comb = right comb over k+2 inputs.
RewriteRule zxa9(int bound) {
  RewriteRule r;
  r.name = "ZXA.9";
  r.schema_params = "k spectator inputs, k in 0..max_arity";
  for (int k = 0; k <= bound; ++k)
    r.instances.push_back(inst("k=" + std::to_string(k),
                               term_to_diagram(left_comb(k + 2)),
                               term_to_diagram(right_comb(k + 2))));
  return r;
}

std::vector<RewriteRule> zxa_db(int bound) {
  std::vector<RewriteRule> db;
  db.push_back(zxa1(bound));
  db.push_back(zxa2(bound));
  db.push_back(zxa3(bound));
  db.push_back(zxa4(bound));
  // Copy distributes over XOR.
  db.push_back(closed_rule(
      "ZXA.5", "(seq (z 2 1 0) (x 1 2))",
      "(seq (par (x 1 2) (x 1 2)) (par (id 1) (swap) (id 1)) "
      "(par (z 2 1 0) (z 2 1 0)))"));
  // Deleting an XOR deletes its arguments.
  db.push_back(closed_rule("ZXA.6", "(seq (x 2 1) (z 1 0 0))",
                           "(par (z 1 0 0) (z 1 0 0))"));
  // The 0 state copied and deleted is the empty diagram.
  db.push_back(closed_rule("ZXA.7", "(seq (z 0 1 0) (x 1 0))", "(id 0)"));
  // Hopf: a doubly-connected copy/parity pair disconnects.
  {
    Diagram lhs;
    lhs.n_in = lhs.n_out = 1;
    int x = lhs.add_vertex({VKind::X, 0, 3});
    int z = lhs.add_vertex({VKind::Z, 0, 3});
    lhs.add_edge({kInB, 0}, {x, 0});
    lhs.add_edge({x, 1}, {z, 0});
    lhs.add_edge({x, 2}, {z, 1});
    lhs.add_edge({z, 2}, {kOutB, 0});
    RewriteRule r;
    r.name = "ZXA.8";
    r.instances.push_back(
        inst("", std::move(lhs), td("(seq (x 1 0) (z 0 1 0))")));
    db.push_back(std::move(r));
  }
  db.push_back(zxa9(bound));
  // 1 is the unit of AND.
  db.push_back(
      closed_rule("ZXA.10", "(seq (par (z 0 1 pi) (id 1)) (and))", "(id 1)"));
  // AND is commutative.
  db.push_back(closed_rule("ZXA.11", "(seq (swap) (and))", "(and)"));
  // Copy distributes over AND.
  db.push_back(closed_rule(
      "ZXA.12", "(seq (and) (x 1 2))",
      "(seq (par (x 1 2) (x 1 2)) (par (id 1) (swap) (id 1)) "
      "(par (and) (and)))"));
  // Deleting an AND deletes its arguments.
  db.push_back(
      closed_rule("ZXA.13", "(seq (and) (x 1 0))", "(par (x 1 0) (x 1 0))"));
  // The 1 state is copied.
  db.push_back(closed_rule("ZXA.14", "(seq (z 0 1 pi) (x 1 2))",
                           "(par (z 0 1 pi) (z 0 1 pi))"));
  // AND is special: copying then conjoining is the identity.
  db.push_back(closed_rule("ZXA.15", "(seq (x 1 2) (and))", "(id 1)"));
  // The pi costate is copied by AND.
  db.push_back(closed_rule("ZXA.16", "(seq (and) (z 1 0 pi))",
                           "(par (z 1 0 pi) (z 1 0 pi))"));
  // AND distributes over XOR: a AND (b XOR c) = (a AND b) XOR (a AND c).
  db.push_back(closed_rule(
      "ZXA.17", "(seq (par (id 1) (z 2 1 0)) (and))",
      "(seq (par (x 1 2) (id 2)) (par (id 1) (swap) (id 1)) "
      "(par (and) (and)) (z 2 1 0))"));
  return db;
}

std::vector<RewriteRule> tof_db() {
  Circuit ket0 = expand_derived("ket0");
  Circuit bra0 = expand_derived("bra0");
  std::vector<RewriteRule> db;
  // A |1> control is dropped from a Toffoli.
  db.push_back(circ_rule("TOF.1a", C(2, {K1(0), T(2, {0, 1})}),
                         C(2, {K1(0), T(2, {1})})));
  db.push_back(circ_rule("TOF.1b", C(3, {T(2, {0, 1}), B1(0)}),
                         C(3, {T(2, {1}), B1(0)})));
  // A |0> control kills the Toffoli.
  db.push_back(circ_rule(
      "TOF.2a", circ_seq(circ_par(ket0, circ_id(2)), C(3, {T(2, {0, 1})})),
      circ_par(ket0, circ_id(2))));
  db.push_back(circ_rule(
      "TOF.2b", circ_seq(C(3, {T(2, {0, 1})}), circ_par(bra0, circ_id(2))),
      circ_par(bra0, circ_id(2))));
  // Disjointly-supported and compatibly-supported Toffolis commute.
  db.push_back(circ_rule("TOF.3", C(5, {T(2, {0, 1}), T(2, {3, 4})}),
                         C(5, {T(2, {3, 4}), T(2, {0, 1})})));
  db.push_back(circ_rule("TOF.4", C(5, {T(0, {1, 2}), T(4, {2, 3})}),
                         C(5, {T(4, {2, 3}), T(0, {1, 2})})));
  db.push_back(circ_rule("TOF.5", C(4, {T(0, {1, 2}), T(3, {1, 2})}),
                         C(4, {T(3, {1, 2}), T(0, {1, 2})})));
  db.push_back(circ_rule("TOF.6", C(4, {T(3, {0, 2}), T(3, {1, 2})}),
                         C(4, {T(3, {1, 2}), T(3, {0, 2})})));
  // Two single-control assertions conjoin into one double-control assertion.
  db.push_back(circ_rule(
      "TOF.7",
      C(2, {K1(2), T(2, {0}), T(2, {}), B1(2), K1(2), T(2, {1}), T(2, {}),
            B1(2)}),
      C(2, {K1(2), T(2, {0, 1}), T(2, {}), B1(2)})));
  // <1|1> = 1.
  db.push_back(circ_rule("TOF.8", C(0, {K1(0), B1(0)}), C(0, {})));
  // The Toffoli is an involution.
  db.push_back(
      circ_rule("TOF.9", C(3, {T(2, {0, 1}), T(2, {0, 1})}), C(3, {})));
  // Conjugation laws for overlapping Toffolis.
  db.push_back(circ_rule("TOF.10",
                         C(4, {T(3, {1, 2}), T(2, {0, 1}), T(3, {1, 2})}),
                         C(4, {T(3, {0, 1}), T(2, {0, 1})})));
  db.push_back(circ_rule("TOF.11",
                         C(4, {T(1, {0}), T(3, {1, 2}), T(1, {0})}),
                         C(4, {T(3, {0, 2}), T(3, {1, 2})})));
  db.push_back(circ_rule("TOF.12",
                         C(4, {T(2, {0, 1}), T(3, {1, 2}), T(2, {0, 1})}),
                         C(4, {T(3, {0, 1}), T(3, {1, 2})})));
  db.push_back(circ_rule("TOF.13",
                         C(4, {T(2, {0, 1}), T(3, {2}), T(2, {0, 1})}),
                         C(4, {T(3, {0, 1}), T(3, {2})})));
  // Three alternating CNOTs make a swap.
  db.push_back(circ_rule("TOF.14",
                         C(2, {T(1, {0}), T(0, {1}), T(1, {0})}),
                         C(2, {{Gate::Swap, 0, {}}})));
  // The Toffoli is symmetric in its controls.
  db.push_back(circ_rule(
      "TOF.15", C(3, {T(2, {0, 1})}),
      C(3, {{Gate::Swap, 0, {}}, T(2, {0, 1}), {Gate::Swap, 0, {}}})));
  // A |0>-mediated pair of Toffolis is symmetric in the outer controls.
  {
    Circuit pre = circ_par(circ_id(2), circ_par(ket0, circ_id(2)));
    Circuit post = circ_par(circ_id(2), circ_par(bra0, circ_id(2)));
    db.push_back(circ_rule(
        "TOF.16",
        circ_seq(circ_seq(pre, C(5, {T(2, {0, 1}), T(4, {2, 3}),
                                     T(2, {0, 1})})),
                 post),
        circ_seq(circ_seq(pre, C(5, {T(2, {0, 3}), T(4, {1, 2}),
                                     T(2, {0, 3})})),
                 post)));
  }
  return db;
}

std::vector<RewriteRule> cnot_db() {
  std::vector<RewriteRule> db;
  // Three alternating CNOTs make a swap.
  db.push_back(circ_rule("CNOT.1",
                         C(2, {T(1, {0}), T(0, {1}), T(1, {0})}),
                         C(2, {{Gate::Swap, 0, {}}})));
  // The CNOT is an involution.
  db.push_back(circ_rule("CNOT.2", C(2, {T(1, {0}), T(1, {0})}), C(2, {})));
  // CNOTs sharing only a control commute.
  db.push_back(circ_rule("CNOT.3", C(3, {T(0, {1}), T(2, {1})}),
                         C(3, {T(2, {1}), T(0, {1})})));
  // A |1>-controlled NOT after |1> equals inserting a <1|1> split.
  db.push_back(circ_rule("CNOT.4a", C(1, {K1(0), T(1, {0})}),
                         C(1, {K1(0), T(1, {0}), B1(0), K1(0)})));
  db.push_back(circ_rule("CNOT.4b", C(2, {T(1, {0}), B1(0)}),
                         C(2, {B1(0), K1(0), T(1, {0}), B1(0)})));
  // CNOTs sharing only a target commute.
  db.push_back(circ_rule("CNOT.5", C(3, {T(1, {0}), T(1, {2})}),
                         C(3, {T(1, {2}), T(1, {0})})));
  // <1|1> = 1.
  db.push_back(circ_rule("CNOT.6", C(0, {K1(0), B1(0)}), C(0, {})));
  // A trailing CNOT off a |0>-collapsed control is absorbed.
  db.push_back(circ_rule(
      "CNOT.7a", C(1, {K1(0), K1(0), T(1, {0}), B1(0), T(1, {0})}),
      C(1, {K1(0), K1(0), T(1, {0}), B1(0)})));
  db.push_back(circ_rule(
      "CNOT.7b", C(2, {T(1, {0}), K1(0), T(1, {0}), B1(0), B1(0)}),
      C(2, {K1(0), T(1, {0}), B1(0), B1(0)})));
  // Sliding a CNOT through a CNOT adds a correction.
  db.push_back(circ_rule("CNOT.8",
                         C(3, {T(1, {0}), T(2, {1}), T(1, {0})}),
                         C(3, {T(2, {1}), T(2, {0})})));
  // The zero scalar absorbs a cut wire.
  {
    Circuit zero = C(1, {K1(0), K1(0), T(1, {0}), B1(0), B1(0)});
    db.push_back(circ_rule("CNOT.9", zero,
                           circ_seq(zero, C(1, {B1(0), K1(0)}))));
  }
  return db;
}

std::vector<RewriteRule> lemmas_db() {
  std::vector<RewriteRule> db;
  // The closed blank parity spider is the scalar 1.
  db.push_back(closed_rule("lemma.blackdot", "(z 0 0 0)", "(id 0)"));
  // Two pi states XOR to the blank state.
  db.push_back(closed_rule("lemma.phase-fusion-a",
                           "(seq (par (z 0 1 pi) (z 0 1 pi)) (z 2 1 0))",
                           "(z 0 1 0)"));
  // The pi state deleted is the scalar 1.
  db.push_back(closed_rule("lemma.phase-fusion-b",
                           "(seq (z 0 1 pi) (x 1 0))", "(id 0)"));
  // Conjoining with 0 deletes the other input and outputs 0.
  db.push_back(closed_rule("lemma.oldaxiom",
                           "(seq (par (z 0 1 0) (id 1)) (and))",
                           "(par (x 1 0) (z 0 1 0))"));
  // The uniform state on the target is fixed by a CNOT.
  db.push_back(closed_rule("lemma.whiteunit",
                           "(seq (par (id 1) (x 0 1)) (cnot))",
                           "(par (id 1) (x 0 1))"));
  // A CNOT slides around a cup onto the other leg.
  db.push_back(closed_rule(
      "lemma.cnotslide", "(seq (par (id 1) (cup)) (par (cnot) (id 1)))",
      "(seq (par (id 1) (cup)) (par (id 1) (swap)) (par (cnot) (id 1)) "
      "(par (id 1) (swap)))"));
  // The CNOT is its own mate on the target wire.
  db.push_back(closed_rule(
      "lemma.twist", "(cnot)",
      "(seq (par (id 2) (cup)) (par (id 1) (swap) (id 1)) "
      "(par (cnot) (id 2)) (par (id 1) (cap) (id 1)))"));
  // The CNOT is natural for the diagonal on its target.
  {
    std::vector<Gate> fan{K1(2), T(2, {}), T(2, {1})};
    std::vector<Gate> lhs{T(1, {0})};
    lhs.insert(lhs.end(), fan.begin(), fan.end());
    std::vector<Gate> rhs = fan;
    rhs.push_back(T(1, {0}));
    rhs.push_back(T(2, {0}));
    db.push_back(
        circ_rule("lemma.natoplus", C(2, std::move(lhs)), C(2, std::move(rhs))));
  }
  // Commuting controlled-nots with a trailing gate (one 4-wire instance).
  db.push_back(circ_rule("lemma.iwama",
                         C(4, {T(1, {0}), T(2, {1, 3})}),
                         C(4, {T(2, {0, 3}), T(2, {1, 3}), T(1, {0})})));
  return db;
}

} // namespace

std::vector<RewriteRule> axiom_db(const std::string& set, int max_arity) {
  if (set == "zxa") return zxa_db(max_arity);
  if (set == "tof") return tof_db();
  if (set == "cnot") return cnot_db();
  if (set == "lemmas") return lemmas_db();
  throw DiagramError("axiom_db: unknown set '" + set + "'");
}

namespace {

std::string first_diff(const NatMatrix& a, const NatMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) {
    std::ostringstream os;
    os << "dimension mismatch: " << a.rows << "x" << a.cols << " vs "
       << b.rows << "x" << b.cols;
    return os.str();
  }
  for (std::int64_t r = 0; r < a.rows; ++r)
    for (std::int64_t c = 0; c < a.cols; ++c)
      if (a.at(r, c) != b.at(r, c)) {
        std::ostringstream os;
        os << "entry (" << r << "," << c << "): lhs=" << a.at(r, c)
           << " rhs=" << b.at(r, c);
        return os.str();
      }
  return "";
}

} // namespace

SoundnessReport check_soundness(const RewriteRule& rule) {
  SoundnessReport rep;
  rep.rule = rule.name;
  for (const RuleInstance& in : rule.instances) {
    InstanceReport ir;
    ir.desc = in.desc;
    try {
      NatMatrix l = eval(in.lhs);
      NatMatrix r = eval(in.rhs);
      std::string diff = first_diff(l, r);
      if (diff.empty()) {
        NatMatrix ld = eval(dagger(in.lhs));
        NatMatrix rd = eval(dagger(in.rhs));
        diff = first_diff(ld, rd);
        if (!diff.empty()) diff = "dagger " + diff;
      }
      if (diff.empty()) {
        ir.status = InstanceReport::Pass;
      } else {
        ir.status = InstanceReport::Fail;
        ir.detail = diff;
        rep.pass = false;
      }
    } catch (const ResourceError& e) {
      ir.status = InstanceReport::Skipped;
      ir.detail = e.what();
    }
    rep.instances.push_back(std::move(ir));
  }
  return rep;
}

std::vector<SoundnessReport> check_all(const std::vector<RewriteRule>& db) {
  std::vector<SoundnessReport> out;
  out.reserve(db.size());
  for (const RewriteRule& r : db) out.push_back(check_soundness(r));
  return out;
}

} // namespace zxand
