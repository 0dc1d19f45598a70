// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "zxand/diagram.hpp"

namespace zxand {

// JSON graph format:
//   {"inputs": [0..n_in-1], "outputs": [0..n_out-1],
//    "vertices": [{"id": nat, "kind": "z"|"x"|"and", "phase": 0|1,
//                  "apex": legIndex (and only)}],
//    "edges": [[endpoint, endpoint]], "loops": nat (omitted when 0)}
// with endpoint = {"v": id, "leg": nat} or {"b": "in"|"out", "i": nat}.
// Vertex arities are recovered from the leg indices; an And vertex whose
// apex leg is not 2 has its legs renumbered on input. Output is
// deterministic. Throws DiagramError on malformed input.
std::string diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const std::string& text);

// Graphviz rendering: boundary ports as plaintext nodes, spiders as
// circles (Z) and filled dots (X), And as a triangle with its apex edge
// starred. Deterministic output.
std::string diagram_to_dot(const Diagram& d);

} // namespace zxand
