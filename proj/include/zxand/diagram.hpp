// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace zxand {

// Generator vertices of the calculus. Z is the parity (XOR) spider and
// carries a phase bit (0 or pi); X is the copy spider; And is the
// conjunction monoid with a distinguished apex (output) leg.
enum class VKind : unsigned char { Z, X, And };

struct Vertex {
  VKind kind = VKind::Z;
  int phase = 0; // 0 or 1 (= pi); meaningful for Z only
  int arity = 0; // number of leg slots; And always has 3, apex = leg 2
};

// And vertices carry their apex on this fixed leg slot.
inline constexpr int kApexLeg = 2;

// An endpoint of an edge: either a vertex leg or a boundary port.
// v >= 0: vertex id, leg = leg slot. v == kInB / kOutB: boundary port,
// leg = boundary index.
inline constexpr int kInB = -1;
inline constexpr int kOutB = -2;

struct Endpoint {
  int v = 0;
  int leg = 0;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct Edge {
  Endpoint a, b;
};

// An open graph over generator vertices with ordered boundaries; the
// morphisms of the prop. Identity wires are edges (never vertices); an edge
// may join any two endpoints, including two boundary ports (bent wires) or
// two legs of one vertex (self-loop). `loops` counts closed circles with no
// vertex on them, each worth the scalar 2.
//
// Invariant (validate): every leg slot of every vertex and every boundary
// port is the endpoint of exactly one edge.
struct Diagram {
  std::map<int, Vertex> vertices;
  std::vector<Edge> edges;
  int n_in = 0;
  int n_out = 0;
  int loops = 0;
  int next_id = 0;

  int add_vertex(Vertex v) {
    int id = next_id++;
    vertices.emplace(id, v);
    return id;
  }
  void add_edge(Endpoint a, Endpoint b) { edges.push_back({a, b}); }
};

struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Throws DiagramError if the degree invariant is violated.
void validate(const Diagram& d);

// Primitive generators.
Diagram gen_z(int n, int m, int phase);
Diagram gen_x(int n, int m);
Diagram gen_and();
Diagram gen_id(int n);
Diagram gen_swap();
Diagram gen_cup();
Diagram gen_cap();

// Prop composition (f then g; requires |outputs(f)| == |inputs(g)|),
// tensor (f above g) and dagger (boundary reversal; transpose semantics).
Diagram compose(const Diagram& f, const Diagram& g);
Diagram tensor(const Diagram& f, const Diagram& g);
Diagram dagger(const Diagram& d);

// The identity-on-wires diagram realizing a permutation: output perm[i]
// is connected to input i.
Diagram gen_perm(const std::vector<int>& perm);

// Canonical form for graph equality: a string that is identical for two
// diagrams iff they are isomorphic as open graphs (respecting kinds,
// phases, apex legs and boundary orderings; spider legs and the two And
// inputs are unordered).
std::string canonical_form(const Diagram& d);
bool iso_equal(const Diagram& a, const Diagram& b);

} // namespace zxand
