// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace zxand {

// Unbounded natural number. All semantic arithmetic is exact; values are
// nonnegative by construction (no subtraction is ever performed).
using Nat = boost::multiprecision::cpp_int;

} // namespace zxand
