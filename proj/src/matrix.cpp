// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include "zxand/matrix.hpp"

#include <istream>
#include <map>
#include <sstream>
#include <vector>

namespace zxand {

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

NatMatrix mat_identity(std::int64_t n) {
  NatMatrix m;
  m.rows = m.cols = n;
  for (std::int64_t i = 0; i < n; ++i) m.entries[{i, i}] = 1;
  return m;
}

NatMatrix mat_mul(const NatMatrix& a, const NatMatrix& b) {
  if (a.cols != b.rows) throw MatrixError("mat_mul: dimension mismatch");
  NatMatrix r;
  r.rows = a.rows;
  r.cols = b.cols;
  // Index b's entries by row for the sparse product.
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, const Nat*>>> brow;
  for (const auto& [rc, v] : b.entries) brow[rc.first].push_back({rc.second, &v});
  for (const auto& [rc, av] : a.entries) {
    auto it = brow.find(rc.second);
    if (it == brow.end()) continue;
    for (const auto& [c, bv] : it->second) r.entries[{rc.first, c}] += av * *bv;
  }
  return r;
}

NatMatrix mat_kron(const NatMatrix& a, const NatMatrix& b) {
  NatMatrix r;
  r.rows = a.rows * b.rows;
  r.cols = a.cols * b.cols;
  for (const auto& [arc, av] : a.entries)
    for (const auto& [brc, bv] : b.entries)
      r.entries[{arc.first * b.rows + brc.first,
                 arc.second * b.cols + brc.second}] = av * bv;
  return r;
}

NatMatrix mat_transpose(const NatMatrix& a) {
  NatMatrix r;
  r.rows = a.cols;
  r.cols = a.rows;
  for (const auto& [rc, v] : a.entries) r.entries[{rc.second, rc.first}] = v;
  return r;
}

Classification classify(const NatMatrix& m) {
  Classification c;
  c.zero_one = true;
  std::map<std::int64_t, int> col_count, row_count;
  for (const auto& [rc, v] : m.entries) {
    if (v > 1) c.zero_one = false;
    row_count[rc.first]++;
    col_count[rc.second]++;
  }
  auto at_most = [](const std::map<std::int64_t, int>& cnt) {
    for (const auto& [k, n] : cnt)
      if (n > 1) return false;
    return true;
  };
  c.at_most_one_per_col = c.zero_one && at_most(col_count);
  c.at_most_one_per_row = c.zero_one && at_most(row_count);
  c.exactly_one_per_col =
      c.at_most_one_per_col && (std::int64_t)col_count.size() == m.cols;
  c.exactly_one_per_row =
      c.at_most_one_per_row && (std::int64_t)row_count.size() == m.rows;
  if (c.exactly_one_per_col && c.exactly_one_per_row)
    c.tightest = MapClass::Bijection;
  else if (c.exactly_one_per_col && c.at_most_one_per_row)
    c.tightest = MapClass::Injection;
  else if (c.at_most_one_per_col && c.at_most_one_per_row)
    c.tightest = MapClass::PartialInjection;
  else if (c.exactly_one_per_col)
    c.tightest = MapClass::Function;
  else if (c.at_most_one_per_col)
    c.tightest = MapClass::PartialFunction;
  else if (c.zero_one)
    c.tightest = MapClass::ZeroOneMatrix;
  else
    c.tightest = MapClass::Multirelation;
  return c;
}

const char* map_class_name(MapClass c) {
  switch (c) {
    case MapClass::Multirelation: return "Multirelation";
    case MapClass::ZeroOneMatrix: return "ZeroOneMatrix";
    case MapClass::PartialFunction: return "PartialFunction";
    case MapClass::Function: return "Function";
    case MapClass::PartialInjection: return "PartialInjection";
    case MapClass::Injection: return "Injection";
    case MapClass::Bijection: return "Bijection";
  }
  return "?";
}

NatMatrix restriction_idempotent(const NatMatrix& m) {
  Classification c = classify(m);
  if (!c.at_most_one_per_col)
    throw MatrixError(
        "restriction_idempotent: input is not a partial function");
  NatMatrix r;
  r.rows = r.cols = m.cols;
  for (const auto& [rc, v] : m.entries) r.entries[{rc.second, rc.second}] = 1;
  return r;
}

NatMatrix read_matrix(std::istream& in) {
  NatMatrix m;
  if (!(in >> m.rows >> m.cols)) throw MatrixError("matrix: bad header line");
  if (!is_power_of_two(m.rows) || !is_power_of_two(m.cols))
    throw MatrixError("matrix: dimensions must be powers of two");
  for (std::int64_t r = 0; r < m.rows; ++r)
    for (std::int64_t c = 0; c < m.cols; ++c) {
      std::string tok;
      if (!(in >> tok)) throw MatrixError("matrix: missing entries");
      Nat v;
      try {
        v = Nat(tok);
      } catch (...) {
        throw MatrixError("matrix: bad entry '" + tok + "'");
      }
      if (v < 0) throw MatrixError("matrix: negative entry");
      if (v != 0) m.entries[{r, c}] = v;
    }
  return m;
}

std::string write_matrix(const NatMatrix& m) {
  std::ostringstream os;
  os << m.rows << ' ' << m.cols << '\n';
  for (std::int64_t r = 0; r < m.rows; ++r) {
    for (std::int64_t c = 0; c < m.cols; ++c) {
      if (c) os << ' ';
      os << m.at(r, c);
    }
    os << '\n';
  }
  return os.str();
}

} // namespace zxand
