// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include "zxand/span.hpp"

#include <set>

#include "zxand/eval.hpp"
#include "zxand/term.hpp"

namespace zxand {

Span span_identity(std::int64_t n) {
  Span s;
  s.left = s.right = n;
  for (std::int64_t i = 0; i < n; ++i) s.apex[{i, i}] = 1;
  return s;
}

Span span_compose(const Span& f, const Span& g) {
  if (f.right != g.left)
    throw MatrixError("span_compose: middle object mismatch");
  Span r;
  r.left = f.left;
  r.right = g.right;
  for (const auto& [xy, fm] : f.apex)
    for (const auto& [yz, gm] : g.apex)
      if (xy.second == yz.first) {
        Nat v = fm * gm;
        if (v != 0) r.apex[{xy.first, yz.second}] += v;
      }
  return r;
}

Span span_tensor(const Span& f, const Span& g) {
  Span r;
  r.left = f.left * g.left;
  r.right = f.right * g.right;
  for (const auto& [fxy, fm] : f.apex)
    for (const auto& [gxy, gm] : g.apex)
      r.apex[{fxy.first * g.left + gxy.first,
              fxy.second * g.right + gxy.second}] = fm * gm;
  return r;
}

NatMatrix span_to_matrix(const Span& s) {
  NatMatrix m;
  m.cols = s.left;
  m.rows = s.right;
  for (const auto& [xy, v] : s.apex) m.entries[{xy.second, xy.first}] = v;
  return m;
}

Span matrix_to_span(const NatMatrix& m) {
  if (!is_power_of_two(m.rows) || !is_power_of_two(m.cols))
    throw MatrixError("matrix_to_span: dimensions must be powers of two");
  Span s;
  s.left = m.cols;
  s.right = m.rows;
  for (const auto& [rc, v] : m.entries) s.apex[{rc.second, rc.first}] = v;
  return s;
}

bool span_is_partial_iso(const Span& s) {
  std::set<std::int64_t> xs, ys;
  for (const auto& [xy, v] : s.apex) {
    if (v != 1) return false;
    if (!xs.insert(xy.first).second) return false;
    if (!ys.insert(xy.second).second) return false;
  }
  return true;
}

namespace {

Span gen_span(const TermPtr& t) {
  Span s;
  switch (t->kind) {
    case Term::Z: {
      s.left = std::int64_t(1) << t->n;
      s.right = std::int64_t(1) << t->m;
      for (std::int64_t x = 0; x < s.left; ++x)
        for (std::int64_t y = 0; y < s.right; ++y) {
          int p = __builtin_parityll((unsigned long long)x) ^
                  __builtin_parityll((unsigned long long)y);
          if (p == t->phase) s.apex[{x, y}] = 1;
        }
      return s;
    }
    case Term::X: {
      s.left = std::int64_t(1) << t->n;
      s.right = std::int64_t(1) << t->m;
      for (int v = 0; v < 2; ++v)
        s.apex[{v ? s.left - 1 : 0, v ? s.right - 1 : 0}] += 1;
      return s;
    }
    case Term::And: {
      s.left = 4;
      s.right = 2;
      for (std::int64_t x = 0; x < 4; ++x) s.apex[{x, (x >> 1) & (x & 1)}] = 1;
      return s;
    }
    case Term::Id:
      return span_identity(std::int64_t(1) << t->n);
    case Term::Swap: {
      s.left = s.right = 4;
      for (std::int64_t x = 0; x < 4; ++x)
        s.apex[{x, ((x & 1) << 1) | (x >> 1)}] = 1;
      return s;
    }
    case Term::Cup: {
      s.left = 1;
      s.right = 4;
      s.apex[{0, 0}] = 1;
      s.apex[{0, 3}] = 1;
      return s;
    }
    case Term::Cap: {
      s.left = 4;
      s.right = 1;
      s.apex[{0, 0}] = 1;
      s.apex[{3, 0}] = 1;
      return s;
    }
    default:
      throw DiagramError("gen_span: not a generator");
  }
}

Span term_span(const TermPtr& t) {
  if (t->kind == Term::Seq) {
    Span s = term_span(t->kids.front());
    for (size_t i = 1; i < t->kids.size(); ++i)
      s = span_compose(s, term_span(t->kids[i]));
    return s;
  }
  if (t->kind == Term::Par) {
    Span s = term_span(t->kids.front());
    for (size_t i = 1; i < t->kids.size(); ++i)
      s = span_tensor(s, term_span(t->kids[i]));
    return s;
  }
  return gen_span(t);
}

} // namespace

Span eval_span(const Diagram& d) {
  if (d.n_in + d.n_out > max_wires())
    throw ResourceError("span evaluation: diagram exceeds the wire cap");
  return term_span(diagram_to_term(d));
}

} // namespace zxand
