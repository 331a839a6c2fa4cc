// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "starbimod/bimodule.hpp"
#include "starbimod/forms.hpp"
#include "starbimod/moments.hpp"
#include "starbimod/weyl.hpp"

namespace starbimod {

/// Deterministic generator of small random exact inputs for property checks.
///
/// Rationals have numerators in [-6, 6] and denominators in [1, 4]; complex
/// scalars get an imaginary part half the time.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational();
  Scalar scalar(bool complex = true);
  Poly poly(int max_degree, bool complex = true);

  /// Up to max_terms pairs (a_j, b_j) of degree <= max_degree.
  BimodElement d2_element(int max_terms, int max_degree);
  BimodElement gauss_element(int max_degree);
  WeylElement weyl(int max_exponent, int max_terms);

  /// 1 to max_atoms atoms with distinct points and positive weights.
  MomentFunctional atomic_measure(int max_atoms);
  ScalarMatrix matrix(std::size_t rows, std::size_t cols);
  /// A table with G positive definite and R = G^{-1} S, S hermitian, so that
  /// q acts hermitian for G.
  ActionTable action_table(std::size_t dim);

  int uniform(int lo, int hi);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace starbimod
