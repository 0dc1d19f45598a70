// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include "zxand/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace zxand {

void validate(const Diagram& d) {
  // Count how often each vertex leg and boundary port occurs as an endpoint.
  std::map<Endpoint, int> seen;
  for (const Edge& e : d.edges) {
    seen[e.a]++;
    seen[e.b]++;
  }
  auto check = [&](Endpoint ep, const char* what) {
    auto it = seen.find(ep);
    int c = it == seen.end() ? 0 : it->second;
    if (c != 1) {
      std::ostringstream os;
      os << "degree invariant violated: " << what << " (" << ep.v << ","
         << ep.leg << ") has degree " << c;
      throw DiagramError(os.str());
    }
    seen.erase(it);
  };
  for (const auto& [id, v] : d.vertices) {
    if (v.kind == VKind::And && v.arity != 3)
      throw DiagramError("And vertex must have exactly 3 legs");
    if (v.arity < 0) throw DiagramError("negative arity");
    for (int l = 0; l < v.arity; ++l) check({id, l}, "vertex leg");
  }
  for (int i = 0; i < d.n_in; ++i) check({kInB, i}, "input port");
  for (int i = 0; i < d.n_out; ++i) check({kOutB, i}, "output port");
  if (!seen.empty())
    throw DiagramError("edge endpoint refers to a nonexistent leg or port");
  if (d.loops < 0) throw DiagramError("negative loop count");
}

static Diagram spider(VKind k, int n, int m, int phase) {
  if (n < 0 || m < 0) throw DiagramError("negative arity");
  Diagram d;
  d.n_in = n;
  d.n_out = m;
  int v = d.add_vertex({k, phase, n + m});
  for (int i = 0; i < n; ++i) d.add_edge({kInB, i}, {v, i});
  for (int j = 0; j < m; ++j) d.add_edge({v, n + j}, {kOutB, j});
  return d;
}

Diagram gen_z(int n, int m, int phase) {
  if (phase != 0 && phase != 1) throw DiagramError("phase must be 0 or 1");
  return spider(VKind::Z, n, m, phase);
}

Diagram gen_x(int n, int m) { return spider(VKind::X, n, m, 0); }

Diagram gen_and() {
  Diagram d;
  d.n_in = 2;
  d.n_out = 1;
  int v = d.add_vertex({VKind::And, 0, 3});
  d.add_edge({kInB, 0}, {v, 0});
  d.add_edge({kInB, 1}, {v, 1});
  d.add_edge({v, kApexLeg}, {kOutB, 0});
  return d;
}

Diagram gen_id(int n) {
  if (n < 0) throw DiagramError("negative arity");
  Diagram d;
  d.n_in = d.n_out = n;
  for (int i = 0; i < n; ++i) d.add_edge({kInB, i}, {kOutB, i});
  return d;
}

Diagram gen_swap() {
  Diagram d;
  d.n_in = d.n_out = 2;
  d.add_edge({kInB, 0}, {kOutB, 1});
  d.add_edge({kInB, 1}, {kOutB, 0});
  return d;
}

Diagram gen_cup() {
  Diagram d;
  d.n_out = 2;
  d.add_edge({kOutB, 0}, {kOutB, 1});
  return d;
}

Diagram gen_cap() {
  Diagram d;
  d.n_in = 2;
  d.add_edge({kInB, 0}, {kInB, 1});
  return d;
}

Diagram gen_perm(const std::vector<int>& perm) {
  Diagram d;
  d.n_in = d.n_out = static_cast<int>(perm.size());
  for (int i = 0; i < d.n_in; ++i) d.add_edge({kInB, i}, {kOutB, perm[i]});
  return d;
}

Diagram tensor(const Diagram& f, const Diagram& g) {
  Diagram r = f;
  r.loops += g.loops;
  int off = f.next_id;
  for (const auto& [id, v] : g.vertices) r.vertices.emplace(id + off, v);
  r.next_id = off + g.next_id;
  auto shift = [&](Endpoint ep) -> Endpoint {
    if (ep.v >= 0) return {ep.v + off, ep.leg};
    if (ep.v == kInB) return {kInB, ep.leg + f.n_in};
    return {kOutB, ep.leg + f.n_out};
  };
  for (const Edge& e : g.edges) r.add_edge(shift(e.a), shift(e.b));
  r.n_in = f.n_in + g.n_in;
  r.n_out = f.n_out + g.n_out;
  return r;
}

Diagram dagger(const Diagram& d) {
  Diagram r = d;
  std::swap(r.n_in, r.n_out);
  for (Edge& e : r.edges) {
    for (Endpoint* ep : {&e.a, &e.b}) {
      if (ep->v == kInB)
        ep->v = kOutB;
      else if (ep->v == kOutB)
        ep->v = kInB;
    }
  }
  return r;
}

Diagram compose(const Diagram& f, const Diagram& g) {
  if (f.n_out != g.n_in)
    throw DiagramError("compose: boundary arity mismatch");
  // Junction j(i) stands for the wire fusing f's output i with g's input i.
  // Junctions are encoded as endpoints with v == kJunc and then eliminated:
  // every junction has degree exactly 2, so each is either spliced away or,
  // if a cycle of junction-only edges remains, turned into a closed loop.
  constexpr int kJunc = -3;
  Diagram r;
  r.loops = f.loops + g.loops;
  r.n_in = f.n_in;
  r.n_out = g.n_out;
  for (const auto& [id, v] : f.vertices) r.vertices.emplace(id, v);
  int off = f.next_id;
  for (const auto& [id, v] : g.vertices) r.vertices.emplace(id + off, v);
  r.next_id = off + g.next_id;

  std::vector<Edge> work;
  for (const Edge& e : f.edges) {
    auto m = [&](Endpoint ep) -> Endpoint {
      if (ep.v == kOutB) return {kJunc, ep.leg};
      return ep;
    };
    work.push_back({m(e.a), m(e.b)});
  }
  for (const Edge& e : g.edges) {
    auto m = [&](Endpoint ep) -> Endpoint {
      if (ep.v >= 0) return {ep.v + off, ep.leg};
      if (ep.v == kInB) return {kJunc, ep.leg};
      return ep;
    };
    work.push_back({m(e.a), m(e.b)});
  }

  // Splice out junctions one at a time.
  for (int j = 0; j < f.n_out; ++j) {
    Endpoint target{kJunc, j};
    std::vector<std::pair<int, int>> inc; // (edge index, side 0/1)
    for (int i = 0; i < static_cast<int>(work.size()); ++i) {
      if (work[i].a == target) inc.push_back({i, 0});
      if (work[i].b == target) inc.push_back({i, 1});
    }
    if (inc.size() != 2) throw DiagramError("compose: dangling junction");
    auto [i1, s1] = inc[0];
    auto [i2, s2] = inc[1];
    if (i1 == i2) {
      // Both ends of one edge meet at this junction: a closed circle.
      r.loops++;
      work.erase(work.begin() + i1);
      continue;
    }
    Endpoint p = s1 == 0 ? work[i1].b : work[i1].a;
    Endpoint q = s2 == 0 ? work[i2].b : work[i2].a;
    // Remove the higher index first so the lower stays valid.
    work.erase(work.begin() + std::max(i1, i2));
    work.erase(work.begin() + std::min(i1, i2));
    work.push_back({p, q});
  }
  r.edges = std::move(work);
  return r;
}

// ---------------------------------------------------------------------------
// Canonical labeling.
//
// Iterative refinement: vertices start colored by (kind, phase, arity,
// multiset of boundary attachments); each round recolors by the multiset of
// (own leg class, neighbor leg class, neighbor color) over incident edges.
// Leg class distinguishes the And apex (1) from all other legs (0); spider
// legs are interchangeable. If the partition is not discrete, ties are broken
// by individualizing each member of the first non-singleton class in turn and
// taking the lexicographically smallest resulting form.
// ---------------------------------------------------------------------------

namespace {

int leg_class(const Vertex& v, int leg) {
  return (v.kind == VKind::And && leg == kApexLeg) ? 1 : 0;
}

struct CanonCtx {
  const Diagram& d;
  std::vector<int> ids; // vertex ids, fixed order
  std::map<int, int> idx_of;
  // adjacency: for each vertex index, list of (own leg class, other endpoint)
  // where other endpoint is (-1, boundary code) or (vertex index, leg class).
  struct Adj {
    int own_class;
    int nb_vertex;   // index into ids, or -1 for boundary
    int nb_class;    // leg class, or encoded boundary port
  };
  std::vector<std::vector<Adj>> adj;

  explicit CanonCtx(const Diagram& dd) : d(dd) {
    for (const auto& [id, v] : d.vertices) {
      idx_of[id] = static_cast<int>(ids.size());
      ids.push_back(id);
    }
    adj.resize(ids.size());
    auto code = [&](Endpoint ep) -> std::pair<int, int> {
      // boundary code: inputs 0..n_in-1, outputs n_in..; unique per port.
      if (ep.v == kInB) return {-1, ep.leg};
      return {-1, d.n_in + ep.leg};
    };
    for (const Edge& e : d.edges) {
      auto side = [&](Endpoint self, Endpoint other) {
        if (self.v < 0) return;
        const Vertex& v = d.vertices.at(self.v);
        Adj a;
        a.own_class = leg_class(v, self.leg);
        if (other.v >= 0) {
          a.nb_vertex = idx_of.at(other.v);
          a.nb_class = leg_class(d.vertices.at(other.v), other.leg);
        } else {
          auto [nv, nc] = code(other);
          a.nb_vertex = nv;
          a.nb_class = nc;
        }
        adj[idx_of.at(self.v)].push_back(a);
      };
      side(e.a, e.b);
      side(e.b, e.a);
    }
  }

  std::vector<int> refine(std::vector<int> color) const {
    size_t n = ids.size();
    while (true) {
      // key(v) = (old color, sorted multiset of (own, nbclass, nbcolor)).
      std::vector<std::pair<std::vector<long long>, int>> keys(n);
      for (size_t i = 0; i < n; ++i) {
        std::vector<long long> k;
        k.push_back(color[i]);
        std::vector<std::array<long long, 3>> items;
        for (const Adj& a : adj[i]) {
          long long nc = a.nb_vertex >= 0 ? color[a.nb_vertex]
                                          : -1000 - a.nb_class;
          items.push_back({(long long)a.own_class,
                           a.nb_vertex >= 0 ? (long long)a.nb_class : 0, nc});
        }
        std::sort(items.begin(), items.end());
        for (auto& it : items) k.insert(k.end(), it.begin(), it.end());
        keys[i] = {std::move(k), static_cast<int>(i)};
      }
      auto sorted = keys;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> next(n);
      int c = -1;
      const std::vector<long long>* prev = nullptr;
      for (auto& [k, i] : sorted) {
        if (!prev || k != *prev) {
          c++;
          prev = &k;
        }
        next[i] = c;
      }
      if (next == color) return color;
      color = std::move(next);
    }
  }

  std::vector<int> initial() const {
    size_t n = ids.size();
    std::vector<std::pair<std::vector<long long>, int>> keys(n);
    for (size_t i = 0; i < n; ++i) {
      const Vertex& v = d.vertices.at(ids[i]);
      std::vector<long long> k{(long long)v.kind, v.phase, v.arity};
      std::vector<long long> bnd;
      for (const Adj& a : adj[i])
        if (a.nb_vertex < 0) bnd.push_back(a.nb_class);
      std::sort(bnd.begin(), bnd.end());
      k.insert(k.end(), bnd.begin(), bnd.end());
      keys[i] = {std::move(k), static_cast<int>(i)};
    }
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> color(n);
    int c = -1;
    const std::vector<long long>* prev = nullptr;
    for (auto& [k, i] : sorted) {
      if (!prev || k != *prev) {
        c++;
        prev = &k;
      }
      color[i] = c;
    }
    return color;
  }

  std::string signature(const std::vector<int>& color) const {
    size_t n = ids.size();
    // color is discrete: canonical index = color.
    std::ostringstream os;
    os << d.n_in << '|' << d.n_out << '|' << d.loops << ';';
    std::vector<int> byc(n);
    for (size_t i = 0; i < n; ++i) byc[color[i]] = static_cast<int>(i);
    for (size_t c = 0; c < n; ++c) {
      const Vertex& v = d.vertices.at(ids[byc[c]]);
      os << 'v' << (int)v.kind << ',' << v.phase << ',' << v.arity << ';';
    }
    std::vector<std::array<long long, 6>> es;
    auto enc = [&](Endpoint ep) -> std::array<long long, 3> {
      if (ep.v == kInB) return {0, 0, ep.leg};
      if (ep.v == kOutB) return {1, 0, ep.leg};
      const Vertex& v = d.vertices.at(ep.v);
      return {2, color[idx_of.at(ep.v)], leg_class(v, ep.leg)};
    };
    for (const Edge& e : d.edges) {
      auto x = enc(e.a), y = enc(e.b);
      if (std::tie(y[0], y[1], y[2]) < std::tie(x[0], x[1], x[2]))
        std::swap(x, y);
      es.push_back({x[0], x[1], x[2], y[0], y[1], y[2]});
    }
    std::sort(es.begin(), es.end());
    for (auto& e : es) {
      os << 'e';
      for (long long t : e) os << t << ',';
      os << ';';
    }
    return os.str();
  }

  std::string canon(std::vector<int> color) const {
    color = refine(std::move(color));
    size_t n = ids.size();
    std::vector<int> count(n, 0);
    for (int c : color) count[c]++;
    int split = -1;
    for (size_t c = 0; c < n; ++c)
      if (count[c] > 1) {
        split = static_cast<int>(c);
        break;
      }
    if (split < 0) return signature(color);
    std::string best;
    for (size_t i = 0; i < n; ++i) {
      if (color[i] != split) continue;
      std::vector<int> ind = color;
      // Individualize i: give it a color strictly between split-1 and split.
      for (size_t j = 0; j < n; ++j)
        if (ind[j] >= split) ind[j]++;
      ind[i] = split;
      std::string s = canon(std::move(ind));
      if (best.empty() || s < best) best = std::move(s);
    }
    return best;
  }
};

} // namespace

std::string canonical_form(const Diagram& d) {
  CanonCtx ctx(d);
  return ctx.canon(ctx.initial());
}

bool iso_equal(const Diagram& a, const Diagram& b) {
  if (a.n_in != b.n_in || a.n_out != b.n_out || a.loops != b.loops ||
      a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size())
    return false;
  return canonical_form(a) == canonical_form(b);
}

} // namespace zxand
