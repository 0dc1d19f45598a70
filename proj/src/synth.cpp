// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include "zxand/synth.hpp"

#include <cstdint>

#include "zxand/eval.hpp"

namespace zxand {

AnfPolynomial anf(const TruthTable& t) {
  if (t.vars < 0 || t.values.size() != (std::size_t{1} << t.vars))
    throw DiagramError("anf: table length must be 2^vars");
  // Subset Moebius transform in place: coeff[S] = XOR of values over all
  // subsets of S.
  std::vector<int> c = t.values;
  for (int b = 0; b < t.vars; ++b)
    for (std::size_t a = 0; a < c.size(); ++a)
      if (a & (std::size_t{1} << b)) c[a] ^= c[a ^ (std::size_t{1} << b)];
  AnfPolynomial p;
  p.vars = t.vars;
  for (std::size_t mask = 0; mask < c.size(); ++mask) {
    if (!(c[mask] & 1)) continue;
    std::set<int> mono;
    for (int v = 0; v < t.vars; ++v)
      if (mask & (std::size_t{1} << (t.vars - 1 - v))) mono.insert(v);
    p.monomials.insert(std::move(mono));
  }
  return p;
}

int anf_evaluate(const AnfPolynomial& p, std::uint64_t a) {
  int acc = 0;
  for (const auto& mono : p.monomials) {
    int prod = 1;
    for (int v : mono)
      prod &= static_cast<int>((a >> (p.vars - 1 - v)) & 1);
    acc ^= prod;
  }
  return acc;
}

namespace {

// Shared body with an explicit variable count so a zero-output block still
// discards all inputs.
Diagram anf_block(int k, const std::vector<AnfPolynomial>& polys) {
  for (const auto& p : polys)
    if (p.vars != k)
      throw DiagramError("anf_to_diagram: mixed variable counts");
  Diagram d;
  d.n_in = k;
  d.n_out = static_cast<int>(polys.size());
  std::vector<int> occ(k, 0);
  for (const auto& p : polys)
    for (const auto& mono : p.monomials)
      for (int v : mono) ++occ[v];
  // One X spider per variable: leg 0 from the input, legs 1..occ feed the
  // monomial occurrences. occ = 0 is the discarding counit.
  std::vector<int> copy_id(k), next_leg(k, 1);
  for (int v = 0; v < k; ++v) {
    copy_id[v] = d.add_vertex({VKind::X, 0, occ[v] + 1});
    d.add_edge({kInB, v}, {copy_id[v], 0});
  }
  auto var_leg = [&](int v) -> Endpoint {
    return {copy_id[v], next_leg[v]++};
  };
  for (int o = 0; o < static_cast<int>(polys.size()); ++o) {
    const auto& p = polys[o];
    int phase = p.monomials.count({}) ? 1 : 0;
    int nc = static_cast<int>(p.monomials.size()) - phase;
    int zid = d.add_vertex({VKind::Z, phase, nc + 1});
    int zleg = 0;
    for (const auto& mono : p.monomials) {
      if (mono.empty()) continue;
      std::vector<int> vs(mono.begin(), mono.end());
      Endpoint cur = var_leg(vs[0]);
      for (std::size_t i = 1; i < vs.size(); ++i) {
        int aid = d.add_vertex({VKind::And, 0, 3});
        d.add_edge(cur, {aid, 0});
        d.add_edge(var_leg(vs[i]), {aid, 1});
        cur = {aid, kApexLeg};
      }
      d.add_edge(cur, {zid, zleg++});
    }
    d.add_edge({zid, nc}, {kOutB, o});
  }
  validate(d);
  return d;
}

int log2_exact(std::int64_t n) {
  int k = 0;
  while ((std::int64_t{1} << k) < n) ++k;
  return k;
}

} // namespace

Diagram anf_to_diagram(const std::vector<AnfPolynomial>& polys) {
  if (polys.empty())
    throw DiagramError("anf_to_diagram: need at least one polynomial");
  return anf_block(polys.front().vars, polys);
}

Diagram matrix_to_diagram(const NatMatrix& m) {
  if (!is_power_of_two(m.rows) || !is_power_of_two(m.cols))
    throw MatrixError("matrix_to_diagram: dimensions must be powers of two");
  const int n = log2_exact(m.cols);  // input wires
  const int mo = log2_exact(m.rows); // output wires
  // Multiplicity-expanded apex in row-major order.
  std::vector<std::int64_t> xs, ys;
  for (const auto& [rc, v] : m.entries)
    for (Nat i = 0; i < v; ++i) {
      ys.push_back(rc.first);
      xs.push_back(rc.second);
    }
  const std::size_t s = xs.size();
  int K = 0;
  while ((std::size_t{1} << K) < std::max<std::size_t>(s, 1)) ++K;

  auto table = [&](auto f) {
    TruthTable t;
    t.vars = K;
    t.values.resize(std::size_t{1} << K);
    for (std::size_t a = 0; a < t.values.size(); ++a) t.values[a] = f(a);
    return t;
  };
  // F's bits are emitted least significant first so that cap k pairs wire
  // n-1-k of the input boundary with F output k.
  std::vector<AnfPolynomial> fp, gp;
  for (int j = 0; j < n; ++j)
    fp.push_back(anf(table([&](std::size_t a) {
      return a < s ? static_cast<int>((xs[a] >> j) & 1) : 0;
    })));
  for (int j = 0; j < mo; ++j)
    gp.push_back(anf(table([&](std::size_t a) {
      return a < s ? static_cast<int>((ys[a] >> (mo - 1 - j)) & 1) : 0;
    })));
  AnfPolynomial chi =
      anf(table([&](std::size_t a) { return a < s ? 1 : 0; }));

  Diagram body = gen_id(0);
  for (int i = 0; i < K; ++i) body = tensor(body, gen_x(0, 1));
  Diagram copies = gen_id(0);
  for (int i = 0; i < K; ++i) copies = tensor(copies, gen_x(1, 3));
  body = compose(body, copies);
  if (K > 0) {
    // Regroup per-variable copy fans into the F, G, chi buses.
    std::vector<int> perm(3 * K);
    for (int i = 0; i < K; ++i)
      for (int j = 0; j < 3; ++j) perm[3 * i + j] = j * K + i;
    body = compose(body, gen_perm(perm));
  }
  Diagram legs =
      tensor(tensor(anf_block(K, fp), anf_block(K, gp)), anf_block(K, {chi}));
  body = compose(body, legs);
  // Post-select the domain predicate on <1|.
  body = compose(body, tensor(gen_id(n + mo), gen_z(1, 0, 1)));
  // Bend F's outputs into the inputs, innermost pair first.
  Diagram full = tensor(gen_id(n), body);
  for (int k = 0; k < n; ++k)
    full = compose(
        full,
        tensor(gen_id(n - 1 - k), tensor(gen_cap(), gen_id(n - 1 - k + mo))));
  validate(full);
  return full;
}

} // namespace zxand
