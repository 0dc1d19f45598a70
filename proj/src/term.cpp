// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include "zxand/term.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace zxand {

static TermPtr mk(Term t) { return std::make_shared<Term>(std::move(t)); }

TermPtr t_z(int n, int m, int phase) {
  Term t;
  t.kind = Term::Z;
  t.n = n;
  t.m = m;
  t.phase = phase;
  return mk(std::move(t));
}
TermPtr t_x(int n, int m) {
  Term t;
  t.kind = Term::X;
  t.n = n;
  t.m = m;
  return mk(std::move(t));
}
TermPtr t_and() {
  Term t;
  t.kind = Term::And;
  return mk(std::move(t));
}
TermPtr t_id(int n) {
  Term t;
  t.kind = Term::Id;
  t.n = n;
  return mk(std::move(t));
}
TermPtr t_swap() {
  Term t;
  t.kind = Term::Swap;
  return mk(std::move(t));
}
TermPtr t_cup() {
  Term t;
  t.kind = Term::Cup;
  return mk(std::move(t));
}
TermPtr t_cap() {
  Term t;
  t.kind = Term::Cap;
  return mk(std::move(t));
}
TermPtr t_seq(std::vector<TermPtr> kids) {
  if (kids.size() == 1) return kids[0];
  Term t;
  t.kind = Term::Seq;
  t.kids = std::move(kids);
  return mk(std::move(t));
}
TermPtr t_par(std::vector<TermPtr> kids) {
  if (kids.size() == 1) return kids[0];
  Term t;
  t.kind = Term::Par;
  t.kids = std::move(kids);
  return mk(std::move(t));
}

TermPtr t_perm(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  // Decompose into adjacent transpositions by bubble sort on the current
  // wire order; each pass layer is id ⊗ swap ⊗ id.
  std::vector<int> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i;
  std::vector<TermPtr> layers;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (perm[cur[i]] > perm[cur[i + 1]]) {
        std::swap(cur[i], cur[i + 1]);
        std::vector<TermPtr> row;
        if (i > 0) row.push_back(t_id(i));
        row.push_back(t_swap());
        if (i + 2 < n) row.push_back(t_id(n - i - 2));
        layers.push_back(t_par(std::move(row)));
        moved = true;
      }
    }
  }
  if (layers.empty()) return t_id(n);
  return t_seq(std::move(layers));
}

std::pair<int, int> term_arity(const TermPtr& t) {
  switch (t->kind) {
    case Term::Z:
    case Term::X:
      return {t->n, t->m};
    case Term::And:
      return {2, 1};
    case Term::Id:
      return {t->n, t->n};
    case Term::Swap:
      return {2, 2};
    case Term::Cup:
      return {0, 2};
    case Term::Cap:
      return {2, 0};
    case Term::Seq: {
      auto [n, m] = term_arity(t->kids.front());
      for (size_t i = 1; i < t->kids.size(); ++i) {
        auto [a, b] = term_arity(t->kids[i]);
        if (a != m) throw DiagramError("seq: arity mismatch");
        m = b;
      }
      return {n, m};
    }
    case Term::Par: {
      int n = 0, m = 0;
      for (const auto& k : t->kids) {
        auto [a, b] = term_arity(k);
        n += a;
        m += b;
      }
      return {n, m};
    }
  }
  throw DiagramError("bad term");
}

Diagram term_to_diagram(const TermPtr& t) {
  switch (t->kind) {
    case Term::Z:
      return gen_z(t->n, t->m, t->phase);
    case Term::X:
      return gen_x(t->n, t->m);
    case Term::And:
      return gen_and();
    case Term::Id:
      return gen_id(t->n);
    case Term::Swap:
      return gen_swap();
    case Term::Cup:
      return gen_cup();
    case Term::Cap:
      return gen_cap();
    case Term::Seq: {
      Diagram d = term_to_diagram(t->kids.front());
      for (size_t i = 1; i < t->kids.size(); ++i)
        d = compose(d, term_to_diagram(t->kids[i]));
      return d;
    }
    case Term::Par: {
      Diagram d = term_to_diagram(t->kids.front());
      for (size_t i = 1; i < t->kids.size(); ++i)
        d = tensor(d, term_to_diagram(t->kids[i]));
      return d;
    }
  }
  throw DiagramError("bad term");
}

// ---------------------------------------------------------------------------
// Derived generators.
// ---------------------------------------------------------------------------

TermPtr derived_term(const std::string& name, int param) {
  if (name == "ket1") return t_z(0, 1, 1);
  if (name == "bra1") return t_z(1, 0, 1);
  if (name == "ket0") return t_seq({t_z(0, 1, 1), t_z(1, 1, 1)});
  if (name == "bra0") return t_seq({t_z(1, 1, 1), t_z(1, 0, 1)});
  if (name == "plus") return t_x(0, 1);
  if (name == "coplus") return t_x(1, 0);
  if (name == "not") return t_z(1, 1, 1);
  if (name == "fanout") return t_x(1, 2);
  if (name == "tof") {
    // Copy both controls, conjoin the copies, add the product onto the
    // target with a parity spider.
    return t_seq({t_par({t_x(1, 2), t_x(1, 2), t_id(1)}),
                  t_par({t_id(1), t_swap(), t_id(2)}),
                  t_par({t_id(2), t_and(), t_id(1)}),
                  t_par({t_id(2), t_z(2, 1, 0)})});
  }
  if (name == "cnot") {
    // Toffoli with a |1>...<1| ancilla pair on the top wire.
    return t_seq({t_par({t_z(0, 1, 1), t_id(2)}), derived_term("tof"),
                  t_par({t_z(1, 0, 1), t_id(2)})});
  }
  if (name == "tri") {
    // Conjunction against a bent wire, apex asserted |0>, bent end negated:
    // the assertion x AND NOT y = 0 as a 1 -> 1 map.
    return t_seq({t_par({t_id(1), t_cup()}), t_par({t_and(), t_id(1)}),
                  t_par({t_z(1, 0, 0), t_z(1, 1, 1)})});
  }
  if (name == "hbox") {
    if (param < 0) throw DiagramError("hbox: negative parameter");
    // Conjunction whose apex runs through pi, a chain of param triangles and
    // the <1| costate; entry n^(x AND y).
    std::vector<TermPtr> chain{t_z(1, 1, 1)};
    for (int i = 0; i < param; ++i) chain.push_back(derived_term("tri"));
    chain.push_back(t_z(1, 0, 1));
    return t_seq({t_par({t_id(1), t_cup()}), t_par({t_and(), t_id(1)}),
                  t_par({t_seq(std::move(chain)), t_id(1)})});
  }
  throw DiagramError("unknown derived generator: " + name);
}

// ---------------------------------------------------------------------------
// Parsing.
// ---------------------------------------------------------------------------

namespace {

struct SExp {
  std::string atom; // nonempty for atoms
  std::vector<SExp> list;
  size_t pos = 0;
};

struct Lexer {
  const std::string& s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && (std::isspace((unsigned char)s[i]) || s[i] == ';')) {
      if (s[i] == ';') {
        while (i < s.size() && s[i] != '\n') ++i;
      } else {
        ++i;
      }
    }
  }
  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "parse error at offset " << i << ": " << msg;
    throw ParseError(os.str());
  }
  SExp next() {
    skip();
    if (i >= s.size()) fail("unexpected end of input");
    SExp e;
    e.pos = i;
    if (s[i] == '(') {
      ++i;
      while (true) {
        skip();
        if (i >= s.size()) fail("unclosed '('");
        if (s[i] == ')') {
          ++i;
          return e;
        }
        e.list.push_back(next());
      }
    }
    if (s[i] == ')') fail("unexpected ')'");
    size_t j = i;
    while (j < s.size() && !std::isspace((unsigned char)s[j]) && s[j] != '(' &&
           s[j] != ')')
      ++j;
    e.atom = s.substr(i, j - i);
    i = j;
    return e;
  }
};

int parse_nat(const SExp& e, const char* what) {
  if (e.atom.empty()) throw ParseError("expected a number for " + std::string(what));
  for (char c : e.atom)
    if (!std::isdigit((unsigned char)c))
      throw ParseError("expected a nonnegative number for " +
                       std::string(what) + ", got '" + e.atom + "'");
  return std::stoi(e.atom);
}

TermPtr build(const SExp& e) {
  if (!e.atom.empty() || e.list.empty() || e.list[0].atom.empty())
    throw ParseError("expected a '(head ...)' form at offset " +
                     std::to_string(e.pos));
  const std::string& h = e.list[0].atom;
  size_t k = e.list.size() - 1;
  auto want = [&](size_t n) {
    if (k != n)
      throw ParseError("'" + h + "' takes " + std::to_string(n) +
                       " argument(s), got " + std::to_string(k));
  };
  if (h == "z") {
    want(3);
    int n = parse_nat(e.list[1], "z inputs");
    int m = parse_nat(e.list[2], "z outputs");
    const std::string& p = e.list[3].atom;
    if (p != "0" && p != "pi") throw ParseError("z phase must be 0 or pi");
    return t_z(n, m, p == "pi" ? 1 : 0);
  }
  if (h == "x") {
    want(2);
    return t_x(parse_nat(e.list[1], "x inputs"), parse_nat(e.list[2], "x outputs"));
  }
  if (h == "and") {
    want(0);
    return t_and();
  }
  if (h == "id") {
    want(1);
    return t_id(parse_nat(e.list[1], "id width"));
  }
  if (h == "swap") {
    want(0);
    return t_swap();
  }
  if (h == "cup") {
    want(0);
    return t_cup();
  }
  if (h == "cap") {
    want(0);
    return t_cap();
  }
  if (h == "seq" || h == "par") {
    if (k < 2)
      throw ParseError("'" + h + "' needs at least two subterms");
    std::vector<TermPtr> kids;
    for (size_t i = 1; i < e.list.size(); ++i) kids.push_back(build(e.list[i]));
    if (h == "seq") {
      TermPtr t = t_seq(std::move(kids));
      term_arity(t); // surface arity mismatches as parse-time errors
      return t;
    }
    return t_par(std::move(kids));
  }
  if (h == "hbox") {
    want(1);
    return derived_term("hbox", parse_nat(e.list[1], "hbox parameter"));
  }
  for (const char* name : {"tof", "cnot", "not", "ket0", "ket1", "bra0",
                           "bra1", "plus", "coplus", "fanout", "tri"}) {
    if (h == name) {
      want(0);
      return derived_term(name);
    }
  }
  throw ParseError("unknown symbol '" + h + "' at offset " +
                   std::to_string(e.pos));
}

} // namespace

TermPtr parse_term(const std::string& text) {
  Lexer lx{text};
  SExp e = lx.next();
  lx.skip();
  if (lx.i != text.size()) lx.fail("trailing input after term");
  return build(e);
}

Diagram parse_diagram(const std::string& text) {
  return term_to_diagram(parse_term(text));
}

std::string print_term(const TermPtr& t) {
  std::ostringstream os;
  switch (t->kind) {
    case Term::Z:
      os << "(z " << t->n << ' ' << t->m << ' ' << (t->phase ? "pi" : "0")
         << ')';
      break;
    case Term::X:
      os << "(x " << t->n << ' ' << t->m << ')';
      break;
    case Term::And:
      os << "(and)";
      break;
    case Term::Id:
      os << "(id " << t->n << ')';
      break;
    case Term::Swap:
      os << "(swap)";
      break;
    case Term::Cup:
      os << "(cup)";
      break;
    case Term::Cap:
      os << "(cap)";
      break;
    case Term::Seq:
    case Term::Par:
      os << (t->kind == Term::Seq ? "(seq" : "(par");
      for (const auto& k : t->kids) os << ' ' << print_term(k);
      os << ')';
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Graph -> term extraction.
//
// A frontier of half-edges is threaded through the diagram: entry (e, s)
// means wire position p of the partial term will eventually attach to
// endpoint s of edge e. Vertices are consumed in id order; legs already on
// the frontier become generator inputs, the rest become outputs. Bent
// boundary wires (input-input and output-output edges) are realized with
// caps and cups, and And vertices whose apex/input split disagrees with the
// frontier are reoriented with cups and caps.
// ---------------------------------------------------------------------------

namespace {

struct Extractor {
  const Diagram& d;
  std::vector<std::pair<int, int>> frontier; // (edge index, open side)
  std::vector<TermPtr> layers;

  Endpoint end(int e, int s) const {
    return s == 0 ? d.edges[e].a : d.edges[e].b;
  }

  int width() const { return static_cast<int>(frontier.size()); }

  void emit(TermPtr t) { layers.push_back(std::move(t)); }

  // Permute the frontier so the entries currently at positions `sel` (in
  // order) end up at the rightmost positions, preserving the relative order
  // of the rest.
  void bring_to_back(const std::vector<int>& sel) {
    int k = width();
    std::vector<int> perm(k, -1);
    std::vector<bool> chosen(k, false);
    for (int p : sel) chosen[p] = true;
    int at = 0;
    for (int i = 0; i < k; ++i)
      if (!chosen[i]) perm[i] = at++;
    for (size_t j = 0; j < sel.size(); ++j) perm[sel[j]] = at++;
    bool ident = true;
    for (int i = 0; i < k; ++i)
      if (perm[i] != i) ident = false;
    if (!ident) emit(t_perm(perm));
    std::vector<std::pair<int, int>> nf(k);
    for (int i = 0; i < k; ++i) nf[perm[i]] = frontier[i];
    frontier = std::move(nf);
  }

  // Oriented And generator: `fin` lists which of legs {0,1,2} are inputs
  // (ascending); the term consumes them in that order and produces the
  // remaining legs ascending. Legs 0/1 are the (interchangeable) monoid
  // inputs, leg 2 the apex; non-standard orientations bend legs with
  // cups and caps. Each case is verified by the evaluator tests.
  static TermPtr oriented_and(const std::vector<int>& fin) {
    unsigned mask = 0;
    for (int l : fin) mask |= 1u << l;
    switch (mask) {
      case 0b011: // inputs (0,1) -> apex: the generator itself
        return t_and();
      case 0b111: // all legs inputs: assert apex equals the conjunction
        return t_seq({t_par({t_and(), t_id(1)}), t_cap()});
      case 0b001: // one input; outputs (other leg, apex)
      case 0b010:
        return t_seq({t_par({t_id(1), t_cup()}), t_par({t_and(), t_id(1)}),
                      t_swap()});
      case 0b100: // apex as input; outputs (0,1)
        return t_seq({t_par({t_id(1), t_cup(), t_cup()}),
                      t_par({t_id(2), t_swap(), t_id(1)}),
                      t_par({t_id(1), t_and(), t_id(2)}),
                      t_par({t_cap(), t_id(2)})});
      case 0b101: // inputs (non-apex leg, apex); output the other leg
      case 0b110:
        return t_seq({t_par({t_id(2), t_cup()}),
                      t_par({t_id(1), t_swap(), t_id(1)}),
                      t_par({t_and(), t_id(2)}), t_par({t_cap(), t_id(1)})});
      case 0b000: // no inputs: the monoid as the state (y0, y1, y0 AND y1)
        return t_seq({t_par({t_cup(), t_cup()}), t_perm({0, 2, 1, 3}),
                      t_par({t_and(), t_id(2)}), t_perm({2, 0, 1})});
      default:
        throw DiagramError("oriented_and: bad leg set");
    }
  }

  TermPtr run() {
    // Initial frontier: one half-edge per input port, in port order.
    frontier.clear();
    for (int i = 0; i < d.n_in; ++i) {
      bool found = false;
      for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
        for (int s = 0; s < 2; ++s) {
          if (end(e, s) == Endpoint{kInB, i}) {
            frontier.push_back({e, 1 - s});
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) throw DiagramError("extract: input port without an edge");
    }
    // Close input-input bent wires (caps) immediately.
    close_pairs();

    for (const auto& [vid, v] : d.vertices) {
      // Partition the legs of v.
      std::vector<int> fpos;   // frontier positions consumed, leg order
      std::vector<int> fin;    // legs consumed (ascending = leg order)
      std::vector<int> fresh;  // legs produced
      for (int l = 0; l < v.arity; ++l) {
        int found = -1;
        for (int p = 0; p < width(); ++p) {
          auto [e, s] = frontier[p];
          if (end(e, s) == Endpoint{vid, l} &&
              std::find(fpos.begin(), fpos.end(), p) == fpos.end()) {
            found = p;
            break;
          }
        }
        if (found >= 0) {
          fpos.push_back(found);
          fin.push_back(l);
        } else {
          fresh.push_back(l);
        }
      }
      bring_to_back(fpos);
      int nf = static_cast<int>(fin.size());
      int nr = static_cast<int>(fresh.size());
      TermPtr g;
      if (v.kind == VKind::Z)
        g = t_z(nf, nr, v.phase);
      else if (v.kind == VKind::X)
        g = t_x(nf, nr);
      else
        g = oriented_and(fin);
      int rest = width() - nf;
      if (rest > 0)
        emit(t_par({t_id(rest), g}));
      else
        emit(g);
      frontier.resize(rest);
      // New frontier entries: the far ends of the fresh legs. Endpoints are
      // unique across edges, so each leg determines one (edge, side).
      for (int l : fresh) {
        int fe = -1, fs = -1;
        for (int e = 0; e < static_cast<int>(d.edges.size()); ++e)
          for (int s = 0; s < 2; ++s)
            if (end(e, s) == Endpoint{vid, l}) {
              fe = e;
              fs = 1 - s;
            }
        if (fe < 0) throw DiagramError("extract: fresh leg without an edge");
        frontier.push_back({fe, fs});
      }
      // A self-loop now shows up as two frontier entries that are each
      // other's open ends: cap them away.
      close_pairs();
    }

    // Output-output bent wires enter late as cups.
    for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
      if (end(e, 0).v == kOutB && end(e, 1).v == kOutB) {
        std::vector<TermPtr> row;
        if (width() > 0) row.push_back(t_id(width()));
        row.push_back(t_cup());
        emit(t_par(std::move(row)));
        frontier.push_back({e, 0});
        frontier.push_back({e, 1});
      }
    }
    // Route to output ports.
    std::vector<int> perm(width(), -1);
    if (width() != d.n_out)
      throw DiagramError("extract: frontier does not match outputs");
    for (int p = 0; p < width(); ++p) {
      auto [e, s] = frontier[p];
      Endpoint ep = end(e, s);
      if (ep.v != kOutB) throw DiagramError("extract: open non-output end");
      perm[p] = ep.leg;
    }
    bool ident = true;
    for (int p = 0; p < width(); ++p)
      if (perm[p] != p) ident = false;
    if (!ident) emit(t_perm(perm));

    for (int i = 0; i < d.loops; ++i) {
      std::vector<TermPtr> row;
      if (d.n_out > 0) row.push_back(t_id(d.n_out));
      row.push_back(t_seq({t_cup(), t_cap()}));
      emit(t_par(std::move(row)));
    }
    if (layers.empty()) return t_id(d.n_in);
    return t_seq(std::move(layers));
  }

  // Caps away any two frontier entries that are the two open ends of the
  // same edge (bent input wires and self-loops produce these).
  void close_pairs() {
    while (true) {
      int p1 = -1, p2 = -1;
      for (int p = 0; p < width() && p1 < 0; ++p)
        for (int q = p + 1; q < width(); ++q)
          if (frontier[p].first == frontier[q].first &&
              frontier[p].second == 1 - frontier[q].second) {
            p1 = p;
            p2 = q;
            break;
          }
      if (p1 < 0) return;
      bring_to_back({p1, p2});
      std::vector<TermPtr> row;
      if (width() - 2 > 0) row.push_back(t_id(width() - 2));
      row.push_back(t_cap());
      emit(t_par(std::move(row)));
      frontier.resize(width() - 2);
    }
  }
};

} // namespace

TermPtr diagram_to_term(const Diagram& d) {
  Extractor ex{d};
  return ex.run();
}

std::string print_diagram(const Diagram& d) {
  return print_term(diagram_to_term(d));
}

} // namespace zxand
