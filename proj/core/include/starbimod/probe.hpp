// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "starbimod/gns.hpp"

namespace starbimod {

enum class Verdict { Bounded, GrowthDetected };

std::string to_string(Verdict v);

/// Relative spread allowed among the last three lambda values for a Bounded verdict.
inline constexpr double kProbeTolerance = 1e-3;

struct ProbeReport {
  std::vector<int> degrees;
  std::vector<double> lambda;
  Verdict verdict = Verdict::Bounded;
};

/// Bounded iff the final three lambda values agree to relative tolerance.
Verdict classify(const std::vector<double>& lambda, double tolerance = kProbeTolerance);

/// Entry (j, k) of a quadratic form on C[q] in the monomial basis.
using FormEntry = std::function<Scalar(int j, int k)>;

/// For each N in degrees, lambda_N = max |c^H H c| / c^H G c over c in the
/// degree <= N quotient, where G is the Hankel matrix of mf and H the
/// hermitian part of the supplied form.
///
/// The Gram kernel is removed exactly: G is factored as L D L^T on its pivot
/// set, L^{-1} H L^{-T} is formed in rationals, and only the final D^{-1/2}
/// scaling and eigenvalue solve use doubles.
ProbeReport probe_quadratic_form(const FormEntry& entry, const MomentFunctional& mf, const std::vector<int>& degrees);

/// Probe of a -> F(a^+ x a) against f(a^+ a): bounded iff theta_F(x) is.
/// Throws Error(NotHermitianElement) if x is not hermitian.
ProbeReport boundedness_probe(const FunctionalSpec& spec, const BimodElement& x, const MomentFunctional& mf,
                              const std::vector<int>& degrees);

/// Probe of a -> f(a^+ q a) against f(a^+ a): bounded iff rho_f(q) is.
ProbeReport multiplication_probe(const MomentFunctional& mf, const std::vector<int>& degrees);

struct LemmaReport {
  double numerical_radius = 0.0;  // M, estimated
  double norm = 0.0;
  bool holds = false;
};

/// Estimates M = sup |<T eta, eta>| over unit eta from `samples` random unit
/// vectors plus eigenvectors of the hermitian parts of e^{i phi} T, and checks
/// ||T|| <= 4 M + 1e-9.
LemmaReport operator_norm_lemma_check(const Eigen::MatrixXcd& t, std::uint64_t seed, int samples = 10000);

}  // namespace starbimod
