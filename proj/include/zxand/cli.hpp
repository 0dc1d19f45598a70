// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace zxand {

// Command-line front end, callable from tests. Subcommands: eval, eq,
// check-axioms, simplify, translate, synth, classify, cross-check, dot;
// --json switches every report to its machine-readable mirror. Input files
// are sniffed by first non-space byte: '{' = JSON diagram, '(' = term,
// anything else = circuit text (matrix format for synth). Exit codes:
// 0 success, 1 semantic inequality or rule failure, 2 input error,
// 3 resource cap exceeded.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

} // namespace zxand
