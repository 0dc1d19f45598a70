// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include "zxand/circuit.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace zxand {

static int delta(const Gate& g) {
  switch (g.kind) {
    case Gate::Ket1:
    case Gate::XUnit:
      return 1;
    case Gate::Bra1:
    case Gate::XCounit:
      return -1;
    default:
      return 0;
  }
}

std::vector<int> width_profile(const Circuit& c) {
  std::vector<int> prof{c.width_in};
  int w = c.width_in;
  for (const Gate& g : c.gates) {
    bool ok = true;
    switch (g.kind) {
      case Gate::GCX: {
        if (g.wire < 0 || g.wire >= w) ok = false;
        std::set<int> seen{g.wire};
        for (int ctl : g.controls) {
          if (ctl < 0 || ctl >= w || !seen.insert(ctl).second) ok = false;
        }
        break;
      }
      case Gate::Ket1:
      case Gate::XUnit:
        if (g.wire < 0 || g.wire > w) ok = false;
        break;
      case Gate::Bra1:
      case Gate::XCounit:
        if (g.wire < 0 || g.wire >= w) ok = false;
        break;
      case Gate::Swap:
        if (g.wire < 0 || g.wire + 1 >= w) ok = false;
        break;
    }
    if (!ok) throw CircuitError("gate wire out of range");
    w += delta(g);
    prof.push_back(w);
  }
  return prof;
}

int width_out(const Circuit& c) { return width_profile(c).back(); }

namespace {

int bit_of(std::int64_t x, int wire, int width) {
  return static_cast<int>((x >> (width - 1 - wire)) & 1);
}

std::int64_t insert_bit(std::int64_t x, int wire, int width, int bit) {
  std::int64_t lowmask = (std::int64_t(1) << (width - wire)) - 1;
  std::int64_t hi = x >> (width - wire);
  std::int64_t lo = x & lowmask;
  return (hi << (width + 1 - wire)) | (std::int64_t(bit) << (width - wire)) |
         lo;
}

} // namespace

NatMatrix gate_semantics(const Gate& g, int width) {
  Circuit probe{width, {g}};
  width_profile(probe); // range check
  NatMatrix m;
  std::int64_t dim = std::int64_t(1) << width;
  switch (g.kind) {
    case Gate::GCX: {
      m.rows = m.cols = dim;
      for (std::int64_t x = 0; x < dim; ++x) {
        bool all = true;
        for (int c : g.controls)
          if (!bit_of(x, c, width)) all = false;
        std::int64_t y = all ? (x ^ (std::int64_t(1) << (width - 1 - g.wire)))
                             : x;
        m.entries[{y, x}] = 1;
      }
      return m;
    }
    case Gate::Swap: {
      m.rows = m.cols = dim;
      for (std::int64_t x = 0; x < dim; ++x) {
        int b1 = bit_of(x, g.wire, width), b2 = bit_of(x, g.wire + 1, width);
        std::int64_t y = x;
        if (b1 != b2)
          y ^= (std::int64_t(1) << (width - 1 - g.wire)) |
               (std::int64_t(1) << (width - 2 - g.wire));
        m.entries[{y, x}] = 1;
      }
      return m;
    }
    case Gate::Ket1:
    case Gate::XUnit: {
      m.rows = dim * 2;
      m.cols = dim;
      for (std::int64_t x = 0; x < dim; ++x) {
        if (g.kind == Gate::XUnit)
          m.entries[{insert_bit(x, g.wire, width, 0), x}] = 1;
        m.entries[{insert_bit(x, g.wire, width, 1), x}] = 1;
      }
      return m;
    }
    case Gate::Bra1:
    case Gate::XCounit: {
      m.rows = dim / 2;
      m.cols = dim;
      for (std::int64_t y = 0; y < dim / 2; ++y) {
        if (g.kind == Gate::XCounit)
          m.entries[{y, insert_bit(y, g.wire, width - 1, 0)}] = 1;
        m.entries[{y, insert_bit(y, g.wire, width - 1, 1)}] = 1;
      }
      return m;
    }
  }
  throw CircuitError("bad gate");
}

NatMatrix circuit_matrix(const Circuit& c) {
  std::vector<int> prof = width_profile(c);
  NatMatrix m = mat_identity(std::int64_t(1) << c.width_in);
  for (size_t i = 0; i < c.gates.size(); ++i)
    m = mat_mul(gate_semantics(c.gates[i], prof[i]), m);
  return m;
}

Circuit circ_id(int n) { return Circuit{n, {}}; }

Circuit circ_seq(const Circuit& a, const Circuit& b) {
  if (width_out(a) != b.width_in)
    throw CircuitError("circ_seq: width mismatch");
  Circuit r = a;
  r.gates.insert(r.gates.end(), b.gates.begin(), b.gates.end());
  return r;
}

Circuit circ_par(const Circuit& a, const Circuit& b) {
  // a's gates act above b's untouched input wires; b's gates run after a
  // has settled, shifted below a's final width.
  Circuit r;
  r.width_in = a.width_in + b.width_in;
  r.gates = a.gates;
  int off = width_out(a);
  for (Gate g : b.gates) {
    g.wire += off;
    for (int& c : g.controls) c += off;
    r.gates.push_back(std::move(g));
  }
  return r;
}

std::vector<Gate> iwama_commute(const Gate& a, const Gate& b) {
  if (a.kind != Gate::GCX || b.kind != Gate::GCX)
    throw CircuitError("iwama_commute: both gates must be controlled-nots");
  int x = a.wire, y = b.wire;
  const auto& X = a.controls;
  auto has = [](const std::vector<int>& s, int v) {
    return std::find(s.begin(), s.end(), v) != s.end();
  };
  if (has(X, y) || x == y)
    throw CircuitError(
        "iwama_commute: the second target must be fresh for the first gate");
  if (!has(b.controls, x)) {
    // x does not feed b at all: the gates commute outright.
    return {b, a};
  }
  // b = [y, Y u {x}] with x not in Y. Then a;b = [y,XuY];[y,Yu{x}];[x,X].
  std::set<int> xy(X.begin(), X.end());
  for (int c : b.controls)
    if (c != x) xy.insert(c);
  Gate g1{Gate::GCX, y, std::vector<int>(xy.begin(), xy.end())};
  return {g1, b, a};
}

namespace {

Circuit ket1C() { return Circuit{0, {{Gate::Ket1, 0, {}}}}; }
Circuit bra1C() { return Circuit{1, {{Gate::Bra1, 0, {}}}}; }
Circuit tofC() { return Circuit{3, {{Gate::GCX, 2, {0, 1}}}}; }
Circuit swapC() { return Circuit{2, {{Gate::Swap, 0, {}}}}; }

Circuit cnotC() {
  // Toffoli with a |1>...<1| pair on a fresh top wire.
  return circ_seq(circ_seq(circ_par(ket1C(), circ_id(2)), tofC()),
                  circ_par(bra1C(), circ_id(2)));
}

Circuit notC() {
  return circ_seq(circ_seq(circ_par(ket1C(), circ_id(1)), cnotC()),
                  circ_par(bra1C(), circ_id(1)));
}

// Bubble-sort routing: a circuit of adjacent swaps sending wire i to
// position perm[i].
Circuit perm_circuit(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  Circuit r = circ_id(n);
  std::vector<int> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < n; ++i)
      if (perm[cur[i]] > perm[cur[i + 1]]) {
        std::swap(cur[i], cur[i + 1]);
        r.gates.push_back({Gate::Swap, i, {}});
        moved = true;
      }
  }
  return r;
}

Circuit embed(const Circuit& block, int offset, int total) {
  Circuit r = circ_id(offset);
  r = circ_par(r, block);
  return circ_par(r, circ_id(total - offset - block.width_in));
}

} // namespace

Circuit expand_derived(const std::string& name) {
  if (name == "cnot") return cnotC();
  if (name == "not") return notC();
  if (name == "ket0") return circ_seq(ket1C(), notC());
  if (name == "bra0") return circ_seq(notC(), bra1C());
  if (name == "tof-flip") {
    Circuit rot = circ_seq(Circuit{3, {{Gate::Swap, 0, {}}}},
                           Circuit{3, {{Gate::Swap, 1, {}}}});
    Circuit inv = circ_seq(Circuit{3, {{Gate::Swap, 1, {}}}},
                           Circuit{3, {{Gate::Swap, 0, {}}}});
    return circ_seq(circ_seq(rot, tofC()), inv);
  }
  if (name == "cnot-flip")
    return circ_seq(circ_seq(swapC(), cnotC()), swapC());
  if (name == "fanout")
    return circ_seq(circ_par(circ_id(1), expand_derived("ket0")),
                    Circuit{2, {{Gate::GCX, 1, {0}}}});
  throw CircuitError("unknown derived gate: " + name);
}

Circuit expand_to_primitive(const Circuit& c) {
  std::vector<int> prof = width_profile(c);
  Circuit r = circ_id(c.width_in);
  for (size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    int w = prof[i];
    if (g.kind != Gate::GCX || g.controls.size() >= 2) {
      r.gates.push_back(g);
      continue;
    }
    if (g.controls.empty()) {
      r = circ_seq(r, embed(notC(), g.wire, w));
      continue;
    }
    // Route control above target on adjacent wires, apply the defining
    // cnot block, route back.
    int ctl = g.controls[0], tgt = g.wire;
    int lo = std::min(ctl, tgt);
    std::vector<int> perm(w);
    int at = 0;
    for (int i2 = 0; i2 < w; ++i2) {
      if (i2 == ctl) {
        perm[i2] = lo;
      } else if (i2 == tgt) {
        perm[i2] = lo + 1;
      } else {
        if (at == lo) at += 2;
        perm[i2] = at++;
      }
    }
    std::vector<int> inv(w);
    for (int i2 = 0; i2 < w; ++i2) inv[perm[i2]] = i2;
    r = circ_seq(r, perm_circuit(perm));
    r = circ_seq(r, embed(cnotC(), lo, w));
    r = circ_seq(r, perm_circuit(inv));
  }
  return r;
}

Diagram circuit_to_diagram(const Circuit& c) {
  std::vector<int> prof = width_profile(c);
  Diagram d = gen_id(c.width_in);
  for (size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    int w = prof[i];
    Diagram layer;
    switch (g.kind) {
      case Gate::Swap: {
        std::vector<int> perm(w);
        for (int k = 0; k < w; ++k) perm[k] = k;
        std::swap(perm[g.wire], perm[g.wire + 1]);
        layer = gen_perm(perm);
        break;
      }
      case Gate::Ket1:
      case Gate::XUnit: {
        layer.n_in = w;
        layer.n_out = w + 1;
        int v = layer.add_vertex(
            {g.kind == Gate::Ket1 ? VKind::Z : VKind::X,
             g.kind == Gate::Ket1 ? 1 : 0, 1});
        layer.add_edge({v, 0}, {kOutB, g.wire});
        for (int k = 0; k < w; ++k)
          layer.add_edge({kInB, k}, {kOutB, k < g.wire ? k : k + 1});
        break;
      }
      case Gate::Bra1:
      case Gate::XCounit: {
        layer.n_in = w;
        layer.n_out = w - 1;
        int v = layer.add_vertex(
            {g.kind == Gate::Bra1 ? VKind::Z : VKind::X,
             g.kind == Gate::Bra1 ? 1 : 0, 1});
        layer.add_edge({kInB, g.wire}, {v, 0});
        for (int k = 0; k < w; ++k)
          if (k != g.wire)
            layer.add_edge({kInB, k}, {kOutB, k < g.wire ? k : k - 1});
        break;
      }
      case Gate::GCX: {
        layer.n_in = layer.n_out = w;
        std::set<int> ctl(g.controls.begin(), g.controls.end());
        for (int k = 0; k < w; ++k)
          if (k != g.wire && !ctl.count(k))
            layer.add_edge({kInB, k}, {kOutB, k});
        if (ctl.empty()) {
          int v = layer.add_vertex({VKind::Z, 1, 2});
          layer.add_edge({kInB, g.wire}, {v, 0});
          layer.add_edge({v, 1}, {kOutB, g.wire});
          break;
        }
        // Copy each control, conjoin the copies left-to-right, then add
        // the product onto the target with a parity spider.
        std::vector<Endpoint> branches;
        for (int cwire : ctl) {
          int v = layer.add_vertex({VKind::X, 0, 3});
          layer.add_edge({kInB, cwire}, {v, 0});
          layer.add_edge({v, 1}, {kOutB, cwire});
          branches.push_back({v, 2});
        }
        Endpoint prod = branches[0];
        for (size_t k = 1; k < branches.size(); ++k) {
          int a = layer.add_vertex({VKind::And, 0, 3});
          layer.add_edge(prod, {a, 0});
          layer.add_edge(branches[k], {a, 1});
          prod = {a, kApexLeg};
        }
        int z = layer.add_vertex({VKind::Z, 0, 3});
        layer.add_edge({kInB, g.wire}, {z, 0});
        layer.add_edge(prod, {z, 1});
        layer.add_edge({z, 2}, {kOutB, g.wire});
        break;
      }
    }
    d = compose(d, layer);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Text format.
// ---------------------------------------------------------------------------

Circuit parse_circuit(const std::string& text) {
  Circuit c;
  bool have_width = false;
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<std::string, std::vector<int>>> rows;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    std::vector<int> args;
    std::string tok;
    while (ls >> tok) {
      // '{', '}' and ',' in the gcx control-set syntax separate numbers
      std::string piece;
      auto flush = [&]() {
        if (piece.empty()) return;
        try {
          args.push_back(std::stoi(piece));
        } catch (...) {
          throw CircuitError("line " + std::to_string(lineno) +
                             ": bad number '" + tok + "'");
        }
        piece.clear();
      };
      for (char ch : tok) {
        if (ch == '{' || ch == '}' || ch == ',') flush();
        else piece += ch;
      }
      flush();
    }
    rows.push_back({op, args});
  }
  std::vector<Gate> gates;
  for (auto& [op, args] : rows) {
    auto need = [&](size_t n) {
      if (args.size() != n)
        throw CircuitError("'" + op + "' takes " + std::to_string(n) +
                           " argument(s)");
    };
    if (op == "width") {
      need(1);
      c.width_in = args[0];
      have_width = true;
    } else if (op == "tof") {
      need(3);
      gates.push_back({Gate::GCX, args[0], {args[1], args[2]}});
    } else if (op == "cnot") {
      need(2);
      gates.push_back({Gate::GCX, args[0], {args[1]}});
    } else if (op == "not") {
      need(1);
      gates.push_back({Gate::GCX, args[0], {}});
    } else if (op == "gcx") {
      if (args.empty()) throw CircuitError("'gcx' needs a target");
      gates.push_back(
          {Gate::GCX, args[0], std::vector<int>(args.begin() + 1, args.end())});
    } else if (op == "ket1") {
      need(1);
      gates.push_back({Gate::Ket1, args[0], {}});
    } else if (op == "bra1") {
      need(1);
      gates.push_back({Gate::Bra1, args[0], {}});
    } else if (op == "plus") {
      need(1);
      gates.push_back({Gate::XUnit, args[0], {}});
    } else if (op == "coplus") {
      need(1);
      gates.push_back({Gate::XCounit, args[0], {}});
    } else if (op == "swap") {
      need(1);
      gates.push_back({Gate::Swap, args[0], {}});
    } else {
      throw CircuitError("unknown gate '" + op + "'");
    }
  }
  c.gates = std::move(gates);
  if (!have_width) {
    // Smallest input width making every gate's wires valid.
    int need = 0, deltas = 0;
    for (const Gate& g : c.gates) {
      int hi = g.wire;
      for (int ctl : g.controls) hi = std::max(hi, ctl);
      int slack = (g.kind == Gate::Ket1 || g.kind == Gate::XUnit) ? 0 : 1;
      if (g.kind == Gate::Swap) slack = 2;
      need = std::max(need, hi + slack - deltas);
      deltas += delta(g);
    }
    c.width_in = need;
  }
  width_profile(c); // validate
  return c;
}

std::string print_circuit(const Circuit& c) {
  std::ostringstream os;
  os << "width " << c.width_in << '\n';
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case Gate::GCX:
        if (g.controls.size() == 2)
          os << "tof " << g.wire << ' ' << g.controls[0] << ' '
             << g.controls[1] << '\n';
        else if (g.controls.size() == 1)
          os << "cnot " << g.wire << ' ' << g.controls[0] << '\n';
        else if (g.controls.empty())
          os << "not " << g.wire << '\n';
        else {
          os << "gcx " << g.wire << " {";
          for (size_t i = 0; i < g.controls.size(); ++i)
            os << (i ? "," : "") << g.controls[i];
          os << "}\n";
        }
        break;
      case Gate::Ket1:
        os << "ket1 " << g.wire << '\n';
        break;
      case Gate::Bra1:
        os << "bra1 " << g.wire << '\n';
        break;
      case Gate::XUnit:
        os << "plus " << g.wire << '\n';
        break;
      case Gate::XCounit:
        os << "coplus " << g.wire << '\n';
        break;
      case Gate::Swap:
        os << "swap " << g.wire << '\n';
        break;
    }
  }
  return os.str();
}

} // namespace zxand
