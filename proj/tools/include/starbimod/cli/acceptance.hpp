// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "starbimod/moments.hpp"

namespace starbimod::cli {

// Tolerances and sizes of the acceptance suite.
inline constexpr double kGnsTimeBudgetSeconds = 60.0;
inline constexpr double kLemmaTolerance = 1e-9;
inline constexpr double kProbeSpreadTolerance = 1e-3;
inline constexpr int kLemmaSamples = 10000;
inline constexpr int kMomentCount = 64;
inline constexpr int kAtomFamilySize = 30;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult(std::uint64_t seed)> run;
};

/// The twelve acceptance criteria, in order.
const std::vector<Criterion>& acceptance_criteria();

/// One line per criterion: "PASS  3 paper-values: ...".
std::string format_result(const CriterionResult& r);

/// Runs every criterion, writing each line to `out` as it completes.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::ostream& out);

// Pinned measures.
MomentFunctional mu3();
MomentFunctional atoms012();
/// Atoms 1/n with weight 2^-n, n = 1..count.
MomentFunctional harmonic_atoms(int count);

}  // namespace starbimod::cli
