// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include "starbimod/probe.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "starbimod/error.hpp"

namespace starbimod {

std::string to_string(Verdict v) { return v == Verdict::Bounded ? "Bounded" : "GrowthDetected"; }

Verdict classify(const std::vector<double>& lambda, double tolerance) {
  if (lambda.empty()) throw Error(ErrorKind::InvalidArgument, "no probe values to classify");
  const std::size_t tail = std::min<std::size_t>(3, lambda.size());
  const auto first = lambda.end() - static_cast<std::ptrdiff_t>(tail);
  const double hi = *std::max_element(first, lambda.end());
  const double lo = *std::min_element(first, lambda.end());
  if (hi == 0.0) return Verdict::Bounded;
  return (hi - lo) / std::abs(hi) <= tolerance ? Verdict::Bounded : Verdict::GrowthDetected;
}

namespace {

void validate_degrees(const std::vector<int>& degrees) {
  if (degrees.empty()) throw Error(ErrorKind::InvalidArgument, "empty degree list");
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    if (degrees[k] < 0 || (k > 0 && degrees[k] <= degrees[k - 1])) {
      throw Error(ErrorKind::InvalidArgument, "degrees must be nonnegative and strictly increasing");
    }
  }
}

// Solves L Y = B in place for unit lower triangular L.
ScalarMatrix forward_substitute(const RationalMatrix& lower, ScalarMatrix b) {
  const std::size_t n = lower.rows();
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < i; ++k) {
        if (sgn(lower(i, k)) != 0) b(i, c) -= Scalar(lower(i, k)) * b(k, c);
      }
    }
  }
  return b;
}

double largest_magnitude(const ScalarMatrix& h, const PivotedLdl& ldl) {
  const std::size_t r = ldl.rank();
  ScalarMatrix hp(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) hp(i, j) = h(ldl.pivots[i], ldl.pivots[j]);

  // L^{-1} H L^{-T}, exact.
  const ScalarMatrix y = forward_substitute(ldl.lower, hp);
  const ScalarMatrix z = forward_substitute(ldl.lower, adjoint(y));

  std::vector<double> scale(r);
  for (std::size_t i = 0; i < r; ++i) scale[i] = 1.0 / std::sqrt(to_double(ldl.diag[i]));

  Eigen::MatrixXcd k(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const std::complex<double> v(to_double(z(i, j).re()), to_double(z(i, j).im()));
      k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v * scale[i] * scale[j];
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(k, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

ProbeReport probe_quadratic_form(const FormEntry& entry, const MomentFunctional& mf, const std::vector<int>& degrees) {
  validate_degrees(degrees);

  // Positivity first, so a bad functional is reported as such.
  std::vector<PivotedLdl> factors;
  for (int n : degrees) {
    factors.push_back(pivoted_ldl(hankel_gram(mf, n)));
    if (factors.back().rank() == 0) {
      throw Error(ErrorKind::SingularGram, "gram matrix vanishes at degree " + std::to_string(n));
    }
  }

  const std::size_t top = static_cast<std::size_t>(degrees.back()) + 1;
  ScalarMatrix form(top, top);
  for (std::size_t j = 0; j < top; ++j)
    for (std::size_t k = 0; k < top; ++k) form(j, k) = entry(static_cast<int>(j), static_cast<int>(k));
  const ScalarMatrix form_h = Scalar(Rational(1, 2)) * (form + adjoint(form));

  ProbeReport report;
  report.degrees = degrees;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    // Pivots index into the leading block, so the full matrix can be passed.
    report.lambda.push_back(largest_magnitude(form_h, factors[i]));
  }
  report.verdict = classify(report.lambda);
  return report;
}

ProbeReport boundedness_probe(const FunctionalSpec& spec, const BimodElement& x, const MomentFunctional& mf,
                              const std::vector<int>& degrees) {
  if (x.tag() != spec.required_tag()) {
    throw Error(ErrorKind::SpecTagMismatch, to_string(spec) + " is not defined on " + to_string(x.tag()));
  }
  if (!is_hermitian(x)) throw Error(ErrorKind::NotHermitianElement, "probe needs a hermitian element");
  return probe_quadratic_form(
      [&](int j, int k) { return functional_F(spec, action(Poly::monomial(j), x, Poly::monomial(k)), mf); }, mf,
      degrees);
}

ProbeReport multiplication_probe(const MomentFunctional& mf, const std::vector<int>& degrees) {
  return probe_quadratic_form([&](int j, int k) { return mf.moment(j + k + 1); }, mf, degrees);
}

LemmaReport operator_norm_lemma_check(const Eigen::MatrixXcd& t, std::uint64_t seed, int samples) {
  if (t.rows() != t.cols()) throw Error(ErrorKind::DimensionMismatch, "operator must be square");
  LemmaReport report;
  const Eigen::Index n = t.rows();
  if (n == 0) {
    report.holds = true;
    return report;
  }

  double m = 0.0;
  auto consider = [&](const Eigen::VectorXcd& v) {
    const double len = v.norm();
    if (len == 0.0) return;
    const Eigen::VectorXcd eta = v / len;
    m = std::max(m, std::abs(eta.dot(t * eta)));
  };

  // Maximizers of Re(e^{i phi} <T eta, eta>) are top eigenvectors of the
  // hermitian part of e^{i phi} T.
  constexpr int kAngles = 64;
  for (int a = 0; a < kAngles; ++a) {
    const std::complex<double> phase = std::polar(1.0, 2.0 * std::numbers::pi * a / kAngles);
    const Eigen::MatrixXcd rotated = phase * t;
    const Eigen::MatrixXcd herm = 0.5 * (rotated + rotated.adjoint());
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
    for (Eigen::Index c = 0; c < n; ++c) consider(solver.eigenvectors().col(c));
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(n);
  for (int s = 0; s < samples; ++s) {
    for (Eigen::Index i = 0; i < n; ++i) v(i) = {gauss(rng), gauss(rng)};
    consider(v);
  }

  report.numerical_radius = m;
  report.norm = Eigen::JacobiSVD<Eigen::MatrixXcd>(t).singularValues()(0);
  report.holds = report.norm <= 4.0 * m + 1e-9;
  return report;
}

}  // namespace starbimod
