// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "zxand/cli.hpp"

int main(int argc, char** argv) {
  return zxand::run(argc, argv, std::cout, std::cerr);
}
