// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include "zxand/eval.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

namespace zxand {

int max_wires() {
  if (const char* s = std::getenv("ZXAND_MAX_WIRES")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 24;
}

namespace {

constexpr int kMaxFactorBits = 28;

// A sparse tensor over binary edge variables: bit i of a key is the value
// of edge open[i].
struct Factor {
  std::vector<int> open; // unique edge ids
  std::unordered_map<std::uint64_t, Nat> vals;
};

struct Contraction {
  const Diagram& d;
  int num_edges;                       // real edges + fresh chain edges
  std::vector<int> factor_refs;        // per edge: # factors holding it
  std::vector<bool> on_boundary;       // per edge: touches a boundary port
  std::vector<Factor> factors;

  explicit Contraction(const Diagram& dd) : d(dd) {
    num_edges = static_cast<int>(d.edges.size());
    on_boundary.assign(num_edges, false);
    for (int e = 0; e < num_edges; ++e)
      if (d.edges[e].a.v < 0 || d.edges[e].b.v < 0) on_boundary[e] = true;
    build_factors();
    factor_refs.assign(num_edges, 0);
    for (const Factor& f : factors)
      for (int e : f.open) factor_refs[e]++;
  }

  int fresh_edge() {
    on_boundary.push_back(false);
    return num_edges++;
  }

  static Nat spider_entry(VKind k, int phase, const std::vector<int>& legs) {
    if (k == VKind::And) return legs[2] == (legs[0] & legs[1]) ? 1 : 0;
    if (k == VKind::X) {
      if (legs.empty()) return 2;
      for (int v : legs)
        if (v != legs[0]) return 0;
      return 1;
    }
    int p = 0;
    for (int v : legs) p ^= v;
    return p == phase ? 1 : 0;
  }

  // Materializes a <=3-leg node over the given per-leg edge ids (repeats
  // allowed: a repeated edge is a self-loop variable, fixed consistently
  // across its legs and left open for the generic sum-out).
  void emit_node(VKind k, int phase, const std::vector<int>& leg_edges) {
    Factor f;
    for (int e : leg_edges)
      if (std::find(f.open.begin(), f.open.end(), e) == f.open.end())
        f.open.push_back(e);
    int u = static_cast<int>(f.open.size());
    for (std::uint64_t a = 0; a < (1ull << u); ++a) {
      std::vector<int> legs;
      for (int e : leg_edges) {
        int pos = static_cast<int>(
            std::find(f.open.begin(), f.open.end(), e) - f.open.begin());
        legs.push_back(static_cast<int>((a >> pos) & 1));
      }
      Nat v = spider_entry(k, phase, legs);
      if (v != 0) f.vals[a] = v;
    }
    factors.push_back(std::move(f));
  }

  void build_factors() {
    for (const auto& [vid, v] : d.vertices) {
      std::vector<int> legs(v.arity, -1);
      for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
        if (d.edges[e].a.v == vid) legs[d.edges[e].a.leg] = e;
        if (d.edges[e].b.v == vid) legs[d.edges[e].b.leg] = e;
      }
      if (v.kind == VKind::And || v.arity <= 3) {
        emit_node(v.kind, v.phase, legs);
        continue;
      }
      // Split a large spider into a chain of arity-3 nodes joined by fresh
      // edges; the phase rides on the last node.
      std::vector<int> rest = legs;
      while (rest.size() > 3) {
        int f = fresh_edge();
        emit_node(v.kind, 0, {rest[0], rest[1], f});
        rest.erase(rest.begin(), rest.begin() + 2);
        rest.insert(rest.begin(), f);
      }
      emit_node(v.kind, v.phase, rest);
    }
  }

  // Sums out every edge of f that no other factor or boundary references.
  void project_complete(Factor& f) {
    std::vector<int> keep, drop;
    for (int e : f.open) {
      // factor_refs counts f itself once.
      if (factor_refs[e] <= 1 && !on_boundary[e])
        drop.push_back(e);
      else
        keep.push_back(e);
    }
    if (drop.empty()) return;
    std::unordered_map<std::uint64_t, Nat> nv;
    for (const auto& [key, val] : f.vals) {
      std::uint64_t nk = 0;
      for (size_t i = 0; i < keep.size(); ++i) {
        int pos = static_cast<int>(
            std::find(f.open.begin(), f.open.end(), keep[i]) - f.open.begin());
        nk |= ((key >> pos) & 1) << i;
      }
      nv[nk] += val;
    }
    for (int e : drop) factor_refs[e]--;
    f.open = keep;
    f.vals = std::move(nv);
  }

  Factor merge(const Factor& a, const Factor& b) {
    std::vector<int> shared;
    for (int e : a.open)
      if (std::find(b.open.begin(), b.open.end(), e) != b.open.end())
        shared.push_back(e);
    Factor r;
    r.open = a.open;
    for (int e : b.open)
      if (std::find(r.open.begin(), r.open.end(), e) == r.open.end())
        r.open.push_back(e);
    if (static_cast<int>(r.open.size()) > kMaxFactorBits)
      throw ResourceError("evaluation: intermediate tensor too large");
    // Bucket b by its shared-edge assignment.
    auto key_of = [](const Factor& f, std::uint64_t key,
                     const std::vector<int>& edges) {
      std::uint64_t k = 0;
      for (size_t i = 0; i < edges.size(); ++i) {
        int pos = static_cast<int>(
            std::find(f.open.begin(), f.open.end(), edges[i]) -
            f.open.begin());
        k |= ((key >> pos) & 1) << i;
      }
      return k;
    };
    std::unordered_map<std::uint64_t,
                       std::vector<std::pair<std::uint64_t, const Nat*>>>
        buckets;
    for (const auto& [key, val] : b.vals)
      buckets[key_of(b, key, shared)].push_back({key, &val});
    for (const auto& [akey, aval] : a.vals) {
      auto it = buckets.find(key_of(a, akey, shared));
      if (it == buckets.end()) continue;
      for (const auto& [bkey, bval] : it->second) {
        std::uint64_t rk = 0;
        for (size_t i = 0; i < r.open.size(); ++i) {
          int e = r.open[i];
          int pa = static_cast<int>(
              std::find(a.open.begin(), a.open.end(), e) - a.open.begin());
          std::uint64_t bit;
          if (pa < static_cast<int>(a.open.size())) {
            bit = (akey >> pa) & 1;
          } else {
            int pb = static_cast<int>(
                std::find(b.open.begin(), b.open.end(), e) - b.open.begin());
            bit = (bkey >> pb) & 1;
          }
          rk |= bit << i;
        }
        r.vals[rk] += aval * *bval;
      }
    }
    for (int e : shared) factor_refs[e]--;
    return r;
  }

  void contract_all() {
    for (Factor& f : factors) project_complete(f);
    while (true) {
      // Candidate pairs: factors sharing at least one edge.
      int bi = -1, bj = -1;
      long long best_score = -1;
      double best_size = 0;
      for (size_t i = 0; i < factors.size(); ++i) {
        for (size_t j = i + 1; j < factors.size(); ++j) {
          bool share = false;
          int unions = static_cast<int>(factors[i].open.size());
          int summable = 0;
          for (int e : factors[j].open) {
            bool in_i = std::find(factors[i].open.begin(),
                                  factors[i].open.end(),
                                  e) != factors[i].open.end();
            if (in_i) {
              share = true;
              if (factor_refs[e] == 2 && !on_boundary[e]) summable++;
            } else {
              unions++;
            }
          }
          if (!share) continue;
          long long score = unions - summable;
          double size = static_cast<double>(factors[i].vals.size()) *
                        static_cast<double>(factors[j].vals.size());
          if (bi < 0 || score < best_score ||
              (score == best_score && size < best_size)) {
            bi = static_cast<int>(i);
            bj = static_cast<int>(j);
            best_score = score;
            best_size = size;
          }
        }
      }
      if (bi < 0) return;
      Factor merged = merge(factors[bi], factors[bj]);
      factors.erase(factors.begin() + bj);
      factors.erase(factors.begin() + bi);
      project_complete(merged);
      factors.push_back(std::move(merged));
    }
  }
};

} // namespace

NatMatrix eval(const Diagram& d) {
  if (d.n_in + d.n_out > max_wires())
    throw ResourceError("evaluation: diagram exceeds the wire cap");
  Contraction ctx(d);
  ctx.contract_all();

  // Remaining factors are disjoint and open only on boundary edges.
  NatMatrix m;
  m.rows = std::int64_t(1) << d.n_out;
  m.cols = std::int64_t(1) << d.n_in;
  Nat scalar = 1;
  for (int i = 0; i < d.loops; ++i) scalar *= 2;
  std::vector<const Factor*> live;
  for (const Factor& f : ctx.factors) {
    if (f.open.empty()) {
      Nat s = 0;
      for (const auto& [k, v] : f.vals) s += v;
      scalar *= s;
      if (scalar == 0) break;
    } else {
      live.push_back(&f);
    }
  }
  if (scalar == 0) return m;

  // Boundary edges not held by any factor are free (pure wires).
  std::vector<int> in_edge(d.n_in, -1), out_edge(d.n_out, -1);
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    for (const Endpoint* ep : {&d.edges[e].a, &d.edges[e].b}) {
      if (ep->v == kInB) in_edge[ep->leg] = e;
      if (ep->v == kOutB) out_edge[ep->leg] = e;
    }
  }
  std::set<int> held;
  for (const Factor* f : live)
    for (int e : f->open) held.insert(e);
  std::vector<int> free_edges;
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e)
    if (ctx.on_boundary[e] && !held.count(e)) free_edges.push_back(e);

  // Enumerate the outer product of the live factors and the free edges.
  struct Part {
    std::map<int, int> assign;
    Nat val;
  };
  std::vector<Part> parts{{{}, scalar}};
  for (const Factor* f : live) {
    std::vector<Part> next;
    for (const Part& p : parts) {
      for (const auto& [key, val] : f->vals) {
        Part q = p;
        for (size_t i = 0; i < f->open.size(); ++i)
          q.assign[f->open[i]] = static_cast<int>((key >> i) & 1);
        q.val *= val;
        next.push_back(std::move(q));
      }
    }
    parts = std::move(next);
  }
  for (int e : free_edges) {
    std::vector<Part> next;
    for (const Part& p : parts)
      for (int b = 0; b < 2; ++b) {
        Part q = p;
        q.assign[e] = b;
        next.push_back(std::move(q));
      }
    parts = std::move(next);
  }
  for (const Part& p : parts) {
    std::int64_t col = 0, row = 0;
    for (int i = 0; i < d.n_in; ++i)
      col |= std::int64_t(p.assign.at(in_edge[i])) << (d.n_in - 1 - i);
    for (int j = 0; j < d.n_out; ++j)
      row |= std::int64_t(p.assign.at(out_edge[j])) << (d.n_out - 1 - j);
    m.add(row, col, p.val);
  }
  return m;
}

NatMatrix gen_matrix_z(int n, int m, int phase) {
  NatMatrix r;
  r.rows = std::int64_t(1) << m;
  r.cols = std::int64_t(1) << n;
  for (std::int64_t y = 0; y < r.rows; ++y)
    for (std::int64_t x = 0; x < r.cols; ++x) {
      int p = __builtin_parityll(static_cast<unsigned long long>(x)) ^
              __builtin_parityll(static_cast<unsigned long long>(y));
      if (p == phase) r.entries[{y, x}] = 1;
    }
  return r;
}

NatMatrix gen_matrix_x(int n, int m) {
  NatMatrix r;
  r.rows = std::int64_t(1) << m;
  r.cols = std::int64_t(1) << n;
  for (int v = 0; v < 2; ++v) {
    std::int64_t x = v ? r.cols - 1 : 0;
    std::int64_t y = v ? r.rows - 1 : 0;
    r.entries[{y, x}] += 1;
  }
  return r;
}

NatMatrix gen_matrix_and() {
  NatMatrix r;
  r.rows = 2;
  r.cols = 4;
  for (std::int64_t x = 0; x < 4; ++x)
    r.entries[{(x >> 1) & (x & 1), x}] = 1;
  return r;
}

NatMatrix gen_matrix_swap() {
  NatMatrix r;
  r.rows = r.cols = 4;
  for (std::int64_t x = 0; x < 4; ++x)
    r.entries[{((x & 1) << 1) | (x >> 1), x}] = 1;
  return r;
}

NatMatrix gen_matrix_cup() {
  NatMatrix r;
  r.rows = 4;
  r.cols = 1;
  r.entries[{0, 0}] = 1;
  r.entries[{3, 0}] = 1;
  return r;
}

NatMatrix gen_matrix_cap() { return mat_transpose(gen_matrix_cup()); }

bool decide_eq(const Diagram& a, const Diagram& b) {
  if (a.n_in != b.n_in || a.n_out != b.n_out)
    throw DiagramError("decide_eq: boundary arity mismatch");
  return eval(a) == eval(b);
}

} // namespace zxand
