// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include "zxand/translate.hpp"

#include "zxand/eval.hpp"
#include "zxand/rewrite.hpp"
#include "zxand/term.hpp"

namespace zxand {

namespace {

Circuit C(int w, std::vector<Gate> gs) { return {w, std::move(gs)}; }
Gate T(int t, std::vector<int> cs) { return {Gate::GCX, t, std::move(cs)}; }

// Z-comultiplication: CNOT with an X-unit-prepared control below the wire.
Circuit zcomul() { return C(1, {{Gate::XUnit, 1, {}}, T(0, {1})}); }
// Z-multiplication: the mirrored image.
Circuit zmul() { return C(2, {T(0, {1}), {Gate::XCounit, 1, {}}}); }
Circuit ket0c() { return expand_derived("ket0"); }
Circuit bra0c() { return expand_derived("bra0"); }
// X-comultiplication: CNOT onto a |0>-prepared target.
Circuit xcomul() { return expand_derived("fanout"); }
Circuit xmul() {
  return circ_seq(C(2, {T(1, {0})}), circ_par(circ_id(1), bra0c()));
}
// AND: Toffoli onto a |0> ancilla below the inputs, copies discarded.
Circuit andc() {
  Circuit c = circ_par(circ_id(2), ket0c());
  c = circ_seq(c, C(3, {T(2, {0, 1})}));
  return circ_seq(c, C(3, {{Gate::XCounit, 0, {}}, {Gate::XCounit, 0, {}}}));
}
Circuit cupc() { return circ_seq(ket0c(), zcomul()); }
Circuit capc() { return circ_seq(zmul(), bra0c()); }

// Arbitrary-arity spiders split into left-combed chains of the table's
// (co)multiplication, (co)unit and phase images.
Circuit zspider(int n, int m, int phase) {
  Circuit c = n == 0 ? ket0c() : circ_id(n);
  for (int i = 1; i < n; ++i)
    c = circ_seq(c, circ_par(zmul(), circ_id(n - i - 1)));
  if (phase) c = circ_seq(c, C(1, {T(0, {})}));
  if (m == 0) return circ_seq(c, bra0c());
  for (int i = 1; i < m; ++i)
    c = circ_seq(c, circ_par(zcomul(), circ_id(i - 1)));
  return c;
}

Circuit xspider(int n, int m) {
  Circuit c = n == 0 ? C(0, {{Gate::XUnit, 0, {}}}) : circ_id(n);
  for (int i = 1; i < n; ++i)
    c = circ_seq(c, circ_par(xmul(), circ_id(n - i - 1)));
  if (m == 0) return circ_seq(c, C(1, {{Gate::XCounit, 0, {}}}));
  for (int i = 1; i < m; ++i)
    c = circ_seq(c, circ_par(xcomul(), circ_id(i - 1)));
  return c;
}

Circuit term_to_circuit(const TermPtr& t) {
  switch (t->kind) {
    case Term::Seq: {
      Circuit c = term_to_circuit(t->kids.front());
      for (std::size_t i = 1; i < t->kids.size(); ++i)
        c = circ_seq(c, term_to_circuit(t->kids[i]));
      return c;
    }
    case Term::Par: {
      Circuit c = term_to_circuit(t->kids.front());
      for (std::size_t i = 1; i < t->kids.size(); ++i)
        c = circ_par(c, term_to_circuit(t->kids[i]));
      return c;
    }
    case Term::Z:
      return zspider(t->n, t->m, t->phase);
    case Term::X:
      return xspider(t->n, t->m);
    case Term::And:
      return andc();
    case Term::Id:
      return circ_id(t->n);
    case Term::Swap:
      return C(2, {{Gate::Swap, 0, {}}});
    case Term::Cup:
      return cupc();
    case Term::Cap:
      return capc();
  }
  throw DiagramError("term_to_circuit: bad term");
}

} // namespace

Circuit zx_to_tofhat(const Diagram& d) {
  return term_to_circuit(diagram_to_term(d));
}

Diagram tofhat_to_zx(const Circuit& c) {
  for (const Gate& g : c.gates)
    if (g.kind == Gate::GCX && g.controls.size() != 2)
      throw CircuitError(
          "tofhat_to_zx: non-primitive controlled-not; expand derived "
          "gates first");
  return circuit_to_diagram(c);
}

RoundtripReport roundtrip_zx(const Diagram& d) {
  RoundtripReport rep;
  Circuit c = zx_to_tofhat(d);
  Diagram back = tofhat_to_zx(expand_to_primitive(c));
  rep.semantic_equal = eval(back) == eval(d);
  rep.syntactic_identity =
      iso_equal(simplify(back).diagram, simplify(d).diagram);
  return rep;
}

RoundtripReport roundtrip_tof(const Circuit& c) {
  RoundtripReport rep;
  Circuit prim = expand_to_primitive(c);
  Diagram dz = tofhat_to_zx(prim);
  Circuit c2 = zx_to_tofhat(dz);
  rep.semantic_equal = circuit_matrix(c2) == circuit_matrix(c);
  rep.syntactic_identity =
      print_circuit(expand_to_primitive(c2)) == print_circuit(prim);
  return rep;
}

} // namespace zxand
