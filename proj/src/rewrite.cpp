// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include "zxand/rewrite.hpp"

#include <algorithm>
#include <set>

#include "zxand/eval.hpp"

namespace zxand {

namespace {

// Leg symmetry classes: the And apex is distinguished, all other legs of
// every generator are interchangeable.
int leg_class(const Vertex& v, int leg) {
  return v.kind == VKind::And && leg == kApexLeg ? 1 : 0;
}

bool is_boundary(const Endpoint& e) { return e.v < 0; }

int port_id(const Endpoint& e, int n_in) {
  return e.v == kInB ? e.leg : n_in + e.leg;
}

Endpoint side_of(const Edge& e, int s) { return s == 0 ? e.a : e.b; }

bool vertex_compatible(const Vertex& p, const Vertex& h) {
  if (p.kind != h.kind || p.arity != h.arity) return false;
  return p.kind != VKind::Z || p.phase == h.phase;
}

} // namespace

std::size_t diagram_stamp(const Diagram& d) {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(d.n_in);
  mix(d.n_out);
  mix(d.loops);
  mix(d.next_id);
  for (const auto& [id, v] : d.vertices) {
    mix(id);
    mix(static_cast<std::size_t>(v.kind) * 31 + v.phase * 7 + v.arity);
  }
  for (const Edge& e : d.edges) {
    mix(e.a.v * 131 + e.a.leg);
    mix(e.b.v * 131 + e.b.leg);
  }
  return h;
}

namespace {

// Tries to extend a full vertex assignment to a half-edge bijection.
// Internal pattern edges claim whole host edges; boundary pattern edges
// claim single host half-edges, in deterministic scan order.
bool finalize_match(const Diagram& pat, const Diagram& host,
                    const std::map<int, int>& vmap, Match& m) {
  std::vector<char> consumed(host.edges.size(), 0);
  std::set<std::pair<int, int>> claimed;
  m.internal_edges.clear();
  m.port_cuts.assign(pat.n_in + pat.n_out, {-1, -1});

  auto pclass = [&pat](const Endpoint& e) {
    return leg_class(pat.vertices.at(e.v), e.leg);
  };
  auto hclass = [&host](const Endpoint& e) {
    return leg_class(host.vertices.at(e.v), e.leg);
  };

  for (const Edge& pe : pat.edges) {
    if (is_boundary(pe.a) || is_boundary(pe.b)) continue;
    int hv1 = vmap.at(pe.a.v), c1 = pclass(pe.a);
    int hv2 = vmap.at(pe.b.v), c2 = pclass(pe.b);
    int found = -1;
    for (std::size_t i = 0; i < host.edges.size(); ++i) {
      if (consumed[i]) continue;
      const Edge& he = host.edges[i];
      if (is_boundary(he.a) || is_boundary(he.b)) continue;
      int a1 = he.a.v, d1 = hclass(he.a);
      int a2 = he.b.v, d2 = hclass(he.b);
      bool fwd = a1 == hv1 && d1 == c1 && a2 == hv2 && d2 == c2;
      bool rev = a1 == hv2 && d1 == c2 && a2 == hv1 && d2 == c1;
      if (fwd || rev) {
        found = static_cast<int>(i);
        break;
      }
    }
    if (found < 0) return false;
    consumed[found] = 1;
    m.internal_edges.push_back(found);
  }

  for (const Edge& pe : pat.edges) {
    bool ab = is_boundary(pe.a), bb = is_boundary(pe.b);
    if (ab == bb) continue; // internal handled; port-port patterns rejected
    Endpoint bport = ab ? pe.a : pe.b;
    Endpoint pleg = ab ? pe.b : pe.a;
    int hv = vmap.at(pleg.v), c = pclass(pleg);
    int port = port_id(bport, pat.n_in);
    bool ok = false;
    for (std::size_t i = 0; i < host.edges.size() && !ok; ++i) {
      if (consumed[i]) continue;
      for (int s = 0; s < 2 && !ok; ++s) {
        Endpoint he = side_of(host.edges[i], s);
        if (is_boundary(he) || he.v != hv || hclass(he) != c) continue;
        if (claimed.count({static_cast<int>(i), s})) continue;
        claimed.insert({static_cast<int>(i), s});
        m.port_cuts[port] = {static_cast<int>(i), s};
        ok = true;
      }
    }
    if (!ok) return false;
  }
  return true;
}

void backtrack(const Diagram& pat, const Diagram& host,
               const std::vector<int>& pvs, std::size_t i,
               std::map<int, int>& vmap, std::set<int>& used,
               const RewriteRule& rule, int instance, std::size_t stamp,
               std::vector<Match>& out) {
  if (i == pvs.size()) {
    Match m;
    m.rule = &rule;
    m.instance = instance;
    m.vertex_map = vmap;
    m.host_stamp = stamp;
    if (finalize_match(pat, host, vmap, m)) out.push_back(std::move(m));
    return;
  }
  const Vertex& pv = pat.vertices.at(pvs[i]);
  for (const auto& [hid, hv] : host.vertices) {
    if (used.count(hid) || !vertex_compatible(pv, hv)) continue;
    vmap[pvs[i]] = hid;
    used.insert(hid);
    backtrack(pat, host, pvs, i + 1, vmap, used, rule, instance, stamp, out);
    used.erase(hid);
    vmap.erase(pvs[i]);
  }
}

} // namespace

std::vector<Match> find_matches(const RewriteRule& rule,
                                const Diagram& host) {
  std::vector<Match> out;
  std::size_t stamp = diagram_stamp(host);
  for (std::size_t ii = 0; ii < rule.instances.size(); ++ii) {
    const Diagram& pat = rule.instances[ii].lhs;
    if (pat.vertices.empty() || pat.loops != 0) continue;
    bool unsupported = false;
    for (const Edge& e : pat.edges)
      if (is_boundary(e.a) && is_boundary(e.b)) unsupported = true;
    if (unsupported) continue;
    std::vector<int> pvs;
    for (const auto& [id, v] : pat.vertices) pvs.push_back(id);
    std::map<int, int> vmap;
    std::set<int> used;
    backtrack(pat, host, pvs, 0, vmap, used, rule, static_cast<int>(ii),
              stamp, out);
  }
  return out;
}

Diagram apply(const Diagram& host, const Match& m) {
  if (m.rule == nullptr || diagram_stamp(host) != m.host_stamp)
    throw DiagramError("apply: stale match (host changed or empty match)");
  const RuleInstance& in = m.rule->instances[m.instance];
  const Diagram& pat = in.lhs;
  const Diagram& rhs = in.rhs;
  int P = pat.n_in + pat.n_out;

  std::set<int> image;
  for (const auto& [p, h] : m.vertex_map) image.insert(h);
  std::set<int> internal(m.internal_edges.begin(), m.internal_edges.end());
  std::map<std::pair<int, int>, int> cut_of;
  for (int p = 0; p < P; ++p)
    cut_of[{m.port_cuts[p].edge, m.port_cuts[p].side}] = p;

  Diagram res;
  res.n_in = host.n_in;
  res.n_out = host.n_out;
  res.loops = host.loops + rhs.loops;
  res.next_id = host.next_id;
  for (const auto& [id, v] : host.vertices)
    if (!image.count(id)) res.vertices.emplace(id, v);
  std::map<int, int> rmap;
  for (const auto& [id, v] : rhs.vertices) rmap[id] = res.add_vertex(v);

  // Each port connects a host-side end (the cut edge's remainder) with an
  // rhs-side end (whatever the rhs wires to that boundary port). Ends are
  // either concrete endpoints in the result or further ports.
  struct End {
    bool is_port = false;
    int port = 0;
    Endpoint ep;
  };
  std::vector<End> host_end(P), rhs_end(P);
  for (int p = 0; p < P; ++p) {
    const auto& cut = m.port_cuts[p];
    auto twin = cut_of.find({cut.edge, 1 - cut.side});
    if (twin != cut_of.end()) {
      host_end[p] = {true, twin->second, {}};
    } else {
      host_end[p] = {false, 0, side_of(host.edges[cut.edge], 1 - cut.side)};
    }
  }
  for (const Edge& re : rhs.edges) {
    for (int s = 0; s < 2; ++s) {
      Endpoint ep = side_of(re, s);
      if (!is_boundary(ep)) continue;
      int p = port_id(ep, rhs.n_in);
      Endpoint other = side_of(re, 1 - s);
      if (is_boundary(other))
        rhs_end[p] = {true, port_id(other, rhs.n_in), {}};
      else
        rhs_end[p] = {false, 0, {rmap.at(other.v), other.leg}};
    }
  }

  for (std::size_t i = 0; i < host.edges.size(); ++i) {
    if (internal.count(static_cast<int>(i))) continue;
    if (cut_of.count({static_cast<int>(i), 0}) ||
        cut_of.count({static_cast<int>(i), 1}))
      continue;
    res.edges.push_back(host.edges[i]);
  }
  for (const Edge& re : rhs.edges)
    if (!is_boundary(re.a) && !is_boundary(re.b))
      res.add_edge({rmap.at(re.a.v), re.a.leg}, {rmap.at(re.b.v), re.b.leg});

  // Chains: walk from every concrete end through alternating port slots
  // (slot 0 = host side, slot 1 = rhs side) until the matching concrete
  // end; port-only cycles become circle scalars.
  std::vector<char> done(P, 0);
  for (int p = 0; p < P; ++p) {
    for (int slot = 0; slot < 2; ++slot) {
      if (done[p]) break;
      const End& e = slot == 0 ? host_end[p] : rhs_end[p];
      if (e.is_port) continue;
      Endpoint start = e.ep;
      int cur = p, cur_slot = slot;
      while (true) {
        done[cur] = 1;
        int out_slot = 1 - cur_slot;
        const End& nxt = out_slot == 0 ? host_end[cur] : rhs_end[cur];
        if (!nxt.is_port) {
          res.add_edge(start, nxt.ep);
          break;
        }
        cur = nxt.port;
        cur_slot = out_slot;
      }
    }
  }
  for (int p = 0; p < P; ++p) {
    if (done[p]) continue;
    int cur = p, slot = 0;
    while (!done[cur]) {
      done[cur] = 1;
      int out_slot = 1 - slot;
      const End& nxt = out_slot == 0 ? host_end[cur] : rhs_end[cur];
      cur = nxt.port;
      slot = out_slot;
    }
    res.loops++;
  }

  validate(res);
#ifndef NDEBUG
  if (host.n_in + host.n_out <= max_wires() &&
      host.vertices.size() + rhs.vertices.size() <= 40) {
    try {
      if (!(eval(host) == eval(res)))
        throw DiagramError("apply: rewrite changed the semantics");
    } catch (const ResourceError&) {
      // too large to verify; skip the assertion
    }
  }
#endif
  return res;
}

// ---------------------------------------------------------------------------
// Simplifier.
// ---------------------------------------------------------------------------

namespace {

struct EdgeAt {
  int idx = -1;
  int side = 0;
};

EdgeAt find_at(const Diagram& d, int v, int leg) {
  for (std::size_t i = 0; i < d.edges.size(); ++i)
    for (int s = 0; s < 2; ++s)
      if (side_of(d.edges[i], s) == Endpoint{v, leg})
        return {static_cast<int>(i), s};
  return {};
}

void drop_edges(Diagram& d, std::vector<int> idxs) {
  std::sort(idxs.begin(), idxs.end(), std::greater<int>());
  for (int i : idxs) d.edges.erase(d.edges.begin() + i);
}

// Repack the legs of a Z or X vertex to 0..degree-1 (never used on And).
void renumber_legs(Diagram& d, int v) {
  int next = 0;
  for (Edge& e : d.edges) {
    if (e.a.v == v) e.a.leg = next++;
    if (e.b.v == v) e.b.leg = next++;
  }
  d.vertices.at(v).arity = next;
}

// Joins the two wires hanging at endpoints a and b (both about to lose
// their vertex); a direct a-b edge closes into a circle.
void splice(Diagram& d, Endpoint a, Endpoint b) {
  EdgeAt ea = find_at(d, a.v, a.leg);
  EdgeAt eb = find_at(d, b.v, b.leg);
  if (ea.idx == eb.idx) {
    d.edges.erase(d.edges.begin() + ea.idx);
    d.loops++;
    return;
  }
  Endpoint oa = side_of(d.edges[ea.idx], 1 - ea.side);
  Endpoint ob = side_of(d.edges[eb.idx], 1 - eb.side);
  drop_edges(d, {ea.idx, eb.idx});
  d.add_edge(oa, ob);
}

} // namespace

SimplifyResult simplify(const Diagram& d0) {
  SimplifyResult out;
  Diagram& d = out.diagram;
  d = d0;

  auto step = [&](const std::string& name, std::vector<int> vs,
                  std::size_t vb, std::size_t eb) {
    out.trace.push_back(
        {name, std::move(vs), vb, eb, d.vertices.size(), d.edges.size()});
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t vb = d.vertices.size(), eb = d.edges.size();

    // Spider self-loop removal: a Z self-loop is the scalar 2 (the loop
    // variable cancels in the parity), an X self-loop is the scalar 1.
    for (const auto& [id, v] : d.vertices) {
      if (v.kind == VKind::And) continue;
      int found = -1;
      for (std::size_t i = 0; i < d.edges.size(); ++i)
        if (d.edges[i].a.v == id && d.edges[i].b.v == id) {
          found = static_cast<int>(i);
          break;
        }
      if (found < 0) continue;
      if (v.kind == VKind::Z) d.loops++;
      d.edges.erase(d.edges.begin() + found);
      renumber_legs(d, id);
      step(v.kind == VKind::Z ? "selfloop.Z" : "selfloop.X", {id}, vb, eb);
      changed = true;
      break;
    }
    if (changed) continue;

    // Isolated scalar vertices: closed blank Z = 1, closed X = 2.
    for (const auto& [id, v] : d.vertices) {
      if (v.arity != 0) continue;
      if (v.kind == VKind::Z && v.phase == 0) {
        d.vertices.erase(id);
        step("scalar.one", {id}, vb, eb);
        changed = true;
        break;
      }
      if (v.kind == VKind::X) {
        d.vertices.erase(id);
        d.loops++;
        step("scalar.two", {id}, vb, eb);
        changed = true;
        break;
      }
      // a closed pi-phased Z is the scalar 0 and must stay
    }
    if (changed) continue;

    // State-dot pairs: a one-legged Z against a one-legged X is 1.
    for (std::size_t i = 0; i < d.edges.size() && !changed; ++i) {
      const Edge& e = d.edges[i];
      if (is_boundary(e.a) || is_boundary(e.b) || e.a.v == e.b.v) continue;
      const Vertex& va = d.vertices.at(e.a.v);
      const Vertex& vc = d.vertices.at(e.b.v);
      if (va.arity != 1 || vc.arity != 1) continue;
      bool zx = va.kind == VKind::Z && vc.kind == VKind::X;
      bool xz = va.kind == VKind::X && vc.kind == VKind::Z;
      if (!zx && !xz) continue;
      int id1 = e.a.v, id2 = e.b.v;
      d.edges.erase(d.edges.begin() + i);
      d.vertices.erase(id1);
      d.vertices.erase(id2);
      step("dot.elim", {id1, id2}, vb, eb);
      changed = true;
    }
    if (changed) continue;

    // Like-spider fusion across all k connecting edges. Exact for X; for Z
    // each extra edge beyond the first contributes a circle scalar.
    for (std::size_t i = 0; i < d.edges.size() && !changed; ++i) {
      const Edge& e = d.edges[i];
      if (is_boundary(e.a) || is_boundary(e.b) || e.a.v == e.b.v) continue;
      Vertex& va = d.vertices.at(e.a.v);
      const Vertex& vc = d.vertices.at(e.b.v);
      if (va.kind != vc.kind || va.kind == VKind::And) continue;
      int keep = e.a.v, gone = e.b.v;
      std::vector<int> conn;
      for (std::size_t j = 0; j < d.edges.size(); ++j) {
        const Edge& f = d.edges[j];
        if ((f.a.v == keep && f.b.v == gone) ||
            (f.a.v == gone && f.b.v == keep))
          conn.push_back(static_cast<int>(j));
      }
      int k = static_cast<int>(conn.size());
      if (va.kind == VKind::Z) {
        va.phase ^= vc.phase;
        d.loops += k - 1;
      }
      drop_edges(d, conn);
      for (Edge& f : d.edges) {
        if (f.a.v == gone) f.a.v = keep;
        if (f.b.v == gone) f.b.v = keep;
      }
      d.vertices.erase(gone);
      renumber_legs(d, keep);
      step(va.kind == VKind::Z ? "fusion.Z" : "fusion.X", {keep, gone}, vb,
           eb);
      changed = true;
    }
    if (changed) continue;

    // Hopf: two parallel edges between a copy and a parity spider cancel
    // (the copied value enters the parity twice).
    for (std::size_t i = 0; i < d.edges.size() && !changed; ++i) {
      const Edge& e = d.edges[i];
      if (is_boundary(e.a) || is_boundary(e.b) || e.a.v == e.b.v) continue;
      const Vertex& va = d.vertices.at(e.a.v);
      const Vertex& vc = d.vertices.at(e.b.v);
      bool pair = (va.kind == VKind::Z && vc.kind == VKind::X) ||
                  (va.kind == VKind::X && vc.kind == VKind::Z);
      if (!pair) continue;
      int v1 = e.a.v, v2 = e.b.v;
      std::vector<int> conn;
      for (std::size_t j = 0; j < d.edges.size(); ++j) {
        const Edge& f = d.edges[j];
        if ((f.a.v == v1 && f.b.v == v2) || (f.a.v == v2 && f.b.v == v1))
          conn.push_back(static_cast<int>(j));
      }
      if (conn.size() < 2) continue;
      drop_edges(d, {conn[0], conn[1]});
      renumber_legs(d, v1);
      renumber_legs(d, v2);
      step("hopf", {v1, v2}, vb, eb);
      changed = true;
    }
    if (changed) continue;

    // AND with a constant input: |1> is the unit, |0> zeroes the output
    // and discards the other input.
    for (const auto& [id, v] : d.vertices) {
      if (v.kind != VKind::And) continue;
      for (int l = 0; l < 2 && !changed; ++l) {
        EdgeAt ea = find_at(d, id, l);
        Endpoint u = side_of(d.edges[ea.idx], 1 - ea.side);
        if (is_boundary(u) || u.v == id) continue;
        const Vertex& uv = d.vertices.at(u.v);
        if (uv.kind != VKind::Z || uv.arity != 1) continue;
        int uid = u.v;
        if (uv.phase == 1) {
          d.edges.erase(d.edges.begin() + ea.idx);
          splice(d, {id, 1 - l}, {id, kApexLeg});
          d.vertices.erase(uid);
          d.vertices.erase(id);
          step("and.unit", {id, uid}, vb, eb);
        } else {
          d.edges.erase(d.edges.begin() + ea.idx);
          int nx = d.add_vertex({VKind::X, 0, 1});
          int nz = d.add_vertex({VKind::Z, 0, 1});
          EdgeAt eo = find_at(d, id, 1 - l);
          (eo.side == 0 ? d.edges[eo.idx].a : d.edges[eo.idx].b) = {nx, 0};
          EdgeAt ex = find_at(d, id, kApexLeg);
          (ex.side == 0 ? d.edges[ex.idx].a : d.edges[ex.idx].b) = {nz, 0};
          d.vertices.erase(uid);
          d.vertices.erase(id);
          step("and.zero", {id, uid}, vb, eb);
        }
        changed = true;
      }
      if (changed) break;
    }
    if (changed) continue;

    // Copy-then-conjoin is the identity: a 3-legged X feeding both AND
    // inputs collapses to a wire.
    for (const auto& [id, v] : d.vertices) {
      if (v.kind != VKind::X || v.arity != 3) continue;
      int target = -1;
      std::vector<int> conn;
      std::set<int> used_legs;
      for (std::size_t j = 0; j < d.edges.size(); ++j) {
        const Edge& f = d.edges[j];
        for (int s = 0; s < 2; ++s) {
          Endpoint me = side_of(f, s), ot = side_of(f, 1 - s);
          if (me.v != id || is_boundary(ot) || ot.v == id) continue;
          auto it = d.vertices.find(ot.v);
          if (it->second.kind != VKind::And || ot.leg == kApexLeg) continue;
          if (target == -1) target = ot.v;
          if (ot.v == target) {
            conn.push_back(static_cast<int>(j));
            used_legs.insert(me.leg);
          }
        }
      }
      if (target < 0 || conn.size() != 2) continue;
      int rest = 0;
      while (used_legs.count(rest)) ++rest;
      drop_edges(d, conn);
      splice(d, {id, rest}, {target, kApexLeg});
      d.vertices.erase(id);
      d.vertices.erase(target);
      step("and.special", {id, target}, vb, eb);
      changed = true;
      break;
    }
    if (changed) continue;

    // A pure state copied by a small X spider propagates to every branch.
    for (const auto& [id, v] : d.vertices) {
      if (v.kind != VKind::Z || v.arity != 1) continue;
      EdgeAt ea = find_at(d, id, 0);
      Endpoint ot = side_of(d.edges[ea.idx], 1 - ea.side);
      if (is_boundary(ot)) continue;
      const Vertex& xv = d.vertices.at(ot.v);
      if (xv.kind != VKind::X || xv.arity < 2 || xv.arity > 3) continue;
      int xid = ot.v, phase = v.phase;
      d.edges.erase(d.edges.begin() + ea.idx);
      for (Edge& f : d.edges) {
        if (f.a.v == xid) f.a = {d.add_vertex({VKind::Z, phase, 1}), 0};
        if (f.b.v == xid) f.b = {d.add_vertex({VKind::Z, phase, 1}), 0};
      }
      d.vertices.erase(id);
      d.vertices.erase(xid);
      step("x.copy-state", {id, xid}, vb, eb);
      changed = true;
      break;
    }
    if (changed) continue;

    // Discarding or asserting an AND output does the same to both inputs.
    for (const auto& [id, v] : d.vertices) {
      if (v.kind != VKind::And) continue;
      EdgeAt ea = find_at(d, id, kApexLeg);
      Endpoint u = side_of(d.edges[ea.idx], 1 - ea.side);
      if (is_boundary(u) || u.v == id) continue;
      const Vertex& uv = d.vertices.at(u.v);
      bool del = uv.kind == VKind::X && uv.arity == 1;
      bool assert1 = uv.kind == VKind::Z && uv.arity == 1 && uv.phase == 1;
      if (!del && !assert1) continue;
      int uid = u.v;
      d.edges.erase(d.edges.begin() + ea.idx);
      for (Edge& f : d.edges) {
        if (f.a.v == id)
          f.a = {d.add_vertex(del ? Vertex{VKind::X, 0, 1}
                                  : Vertex{VKind::Z, 1, 1}),
                 0};
        if (f.b.v == id)
          f.b = {d.add_vertex(del ? Vertex{VKind::X, 0, 1}
                                  : Vertex{VKind::Z, 1, 1}),
                 0};
      }
      d.vertices.erase(uid);
      d.vertices.erase(id);
      step(del ? "and.delete" : "and.assert", {id, uid}, vb, eb);
      changed = true;
      break;
    }
  }

  validate(d);
  return out;
}

} // namespace zxand
