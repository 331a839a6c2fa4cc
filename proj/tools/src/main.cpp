// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "starbimod/cli/app.hpp"

int main(int argc, char** argv) {
  return starbimod::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
