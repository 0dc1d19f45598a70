// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "zxand/circuit.hpp"
#include "zxand/term.hpp"

namespace zxand::testutil {

// A random width-preserving layer over n wires built from small generators.
inline TermPtr random_layer(std::mt19937& rng, int n) {
  std::vector<TermPtr> row;
  int left = n;
  while (left > 0) {
    int pick = static_cast<int>(rng() % 6);
    if (pick == 0 && left >= 2) {
      row.push_back(t_swap());
      left -= 2;
    } else if (pick == 1 && left >= 2) {
      row.push_back(t_z(2, 2, static_cast<int>(rng() % 2)));
      left -= 2;
    } else if (pick == 2 && left >= 2) {
      row.push_back(t_x(2, 2));
      left -= 2;
    } else if (pick == 3 && left >= 2) {
      row.push_back(t_seq({t_and(), t_z(1, 2, 0)}));
      left -= 2;
    } else if (pick == 4) {
      row.push_back(t_z(1, 1, static_cast<int>(rng() % 2)));
      left -= 1;
    } else {
      row.push_back(t_x(1, 1));
      left -= 1;
    }
  }
  return row.size() == 1 ? row[0] : t_par(std::move(row));
}

// n-to-n term of `layers` random layers; at most 4 vertices per layer.
inline TermPtr random_term(std::mt19937& rng, int wires, int layers) {
  std::vector<TermPtr> seq;
  for (int l = 0; l < layers; ++l) seq.push_back(random_layer(rng, wires));
  return seq.size() == 1 ? seq[0] : t_seq(std::move(seq));
}

inline Diagram random_diagram(std::mt19937& rng, int max_wires = 4,
                              int layers = 3) {
  int n = 1 + static_cast<int>(rng() % max_wires);
  return term_to_diagram(random_term(rng, n, layers));
}

// Random circuit of fixed width with gates drawn from GCX (0-2 controls)
// and Swap, optionally Ket1/Bra1 preparations (width drifts within
// [1, width + 2] and returns to `width` at the end via best effort).
inline Circuit random_circuit(std::mt19937& rng, int width, int gates,
                              bool allow_prep) {
  Circuit c;
  c.width_in = width;
  int w = width;
  for (int i = 0; i < gates; ++i) {
    int pick = static_cast<int>(rng() % (allow_prep ? 4 : 2));
    if (pick == 0 || w < 2) {
      if (w < 1) {
        c.gates.push_back({Gate::Ket1, 0, {}});
        ++w;
        continue;
      }
      int nctrl = static_cast<int>(rng() % 3);
      if (nctrl >= w) nctrl = w - 1;
      std::vector<int> wires(w);
      for (int j = 0; j < w; ++j) wires[j] = j;
      std::shuffle(wires.begin(), wires.end(), rng);
      std::vector<int> ctrls(wires.begin() + 1, wires.begin() + 1 + nctrl);
      std::sort(ctrls.begin(), ctrls.end());
      c.gates.push_back({Gate::GCX, wires[0], std::move(ctrls)});
    } else if (pick == 1) {
      c.gates.push_back({Gate::Swap, static_cast<int>(rng() % (w - 1)), {}});
    } else if (pick == 2 && w < width + 2) {
      c.gates.push_back({Gate::Ket1, static_cast<int>(rng() % (w + 1)), {}});
      ++w;
    } else if (w > 1) {
      c.gates.push_back({Gate::Bra1, static_cast<int>(rng() % w), {}});
      --w;
    }
  }
  return c;
}

} // namespace zxand::testutil
