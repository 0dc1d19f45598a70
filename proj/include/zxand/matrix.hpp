// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "zxand/nat.hpp"

namespace zxand {

// Sparse matrix over unbounded naturals with power-of-two dimensions.
// Absent entries are zero; stored entries are strictly positive.
struct NatMatrix {
  std::int64_t rows = 1;
  std::int64_t cols = 1;
  std::map<std::pair<std::int64_t, std::int64_t>, Nat> entries;

  Nat at(std::int64_t r, std::int64_t c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? Nat(0) : it->second;
  }
  void add(std::int64_t r, std::int64_t c, const Nat& v) {
    if (v == 0) return;
    entries[{r, c}] += v;
  }
  friend bool operator==(const NatMatrix&, const NatMatrix&) = default;
};

struct MatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

NatMatrix mat_identity(std::int64_t n);
// Matrix product a*b (a applied after b): a is m2 x m1, b is m1 x m0.
NatMatrix mat_mul(const NatMatrix& a, const NatMatrix& b);
NatMatrix mat_kron(const NatMatrix& a, const NatMatrix& b);
NatMatrix mat_transpose(const NatMatrix& a);

// The tightest class wins; every matrix is at least a Multirelation.
enum class MapClass {
  Multirelation,
  ZeroOneMatrix,
  PartialFunction,
  Function,
  PartialInjection,
  Injection,
  Bijection,
};

struct Classification {
  MapClass tightest;
  bool zero_one;        // all entries <= 1
  bool at_most_one_per_col;
  bool exactly_one_per_col;
  bool at_most_one_per_row;
  bool exactly_one_per_row;
};

Classification classify(const NatMatrix& m);
const char* map_class_name(MapClass c);

// Domain-of-definition idempotent of a partial function: square diagonal
// 0/1 matrix with a 1 at (x,x) iff column x is nonzero. Requires the input
// to be at least a PartialFunction.
NatMatrix restriction_idempotent(const NatMatrix& m);

// Text format: line 1 "rows cols", then `rows` lines of `cols` decimal
// naturals. Dimensions must be powers of two.
NatMatrix read_matrix(std::istream& in);
std::string write_matrix(const NatMatrix& m);

bool is_power_of_two(std::int64_t n);

} // namespace zxand
