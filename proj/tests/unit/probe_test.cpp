// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "starbimod/error.hpp"
#include "starbimod/probe.hpp"

namespace starbimod {
namespace {

using B = BimodElement;
using Spec = FunctionalSpec;

const Poly q = Poly::q();

std::vector<int> range(int lo, int hi) {
  std::vector<int> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

TEST(Classify, LastThreeSpread) {
  EXPECT_EQ(classify({1, 2, 5, 5, 5}), Verdict::Bounded);
  EXPECT_EQ(classify({1, 1.0005, 1.0009}), Verdict::Bounded);
  EXPECT_EQ(classify({1, 1.002, 1.004}), Verdict::GrowthDetected);
  EXPECT_EQ(classify({3, 3, 2, 1}), Verdict::GrowthDetected);
  EXPECT_THROW(classify({}), Error);
}

TEST(BoundednessProbe, IdentityOnGaussian) {
  const auto r = boundedness_probe(Spec::f0(), B::d2(), MomentFunctional::gaussian(64), range(2, 8));
  for (double l : r.lambda) EXPECT_NEAR(l, 1.0, 1e-12);
  EXPECT_EQ(r.verdict, Verdict::Bounded);
}

TEST(BoundednessProbe, DerivativeGrowsOnGaussian) {
  const auto r = boundedness_probe(Spec::f1(), B::d2(), MomentFunctional::gaussian(64), range(2, 10));
  for (std::size_t k = 1; k < r.lambda.size(); ++k) EXPECT_GT(r.lambda[k], r.lambda[k - 1]);
  EXPECT_EQ(r.verdict, Verdict::GrowthDetected);
}

// Multiplication by q against Lebesgue measure on [0,1]: lambda_N is the
// largest zero of the degree N+1 shifted Legendre polynomial, approaching 1
// from below at rate O(1/N^2).
TEST(BoundednessProbe, GaussWeightQOnLebesgueMatchesLegendre) {
  const auto degrees = range(2, 10);
  const auto r = boundedness_probe(Spec::gauss_poly(q), B::gauss(1), MomentFunctional::lebesgue_unit_interval(64),
                                   degrees);
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    const int n = degrees[k] + 1;
    const double root = oracle::largest_root([n](double x) { return oracle::legendre(n, x); }, -1.0, 1.0);
    EXPECT_NEAR(r.lambda[k], 0.5 * (1.0 + root), 1e-9);
    EXPECT_LT(r.lambda[k], 1.0);
    if (k > 0) EXPECT_GT(r.lambda[k], r.lambda[k - 1]);
  }
  EXPECT_GT(r.lambda.back(), 0.98);
}

TEST(MultiplicationProbe, GaussianMatchesHermiteRoots) {
  const auto degrees = range(2, 10);
  const auto r = multiplication_probe(MomentFunctional::gaussian(64), degrees);
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    const int n = degrees[k] + 1;
    const double root = oracle::largest_root([n](double x) { return oracle::hermite_he(n, x); }, -20.0, 20.0);
    EXPECT_NEAR(r.lambda[k], root, 1e-9);
  }
  EXPECT_EQ(r.verdict, Verdict::GrowthDetected);
}

TEST(MultiplicationProbe, FiniteSupportSaturates) {
  const auto mf = MomentFunctional::atomic({{-1, 1}, {0, 1}, {Rational(1, 2), 1}});
  const auto r = multiplication_probe(mf, range(2, 10));
  for (double l : r.lambda) EXPECT_NEAR(l, 1.0, 1e-12);
  EXPECT_EQ(r.verdict, Verdict::Bounded);
}

TEST(BoundednessProbe, Errors) {
  const auto g = MomentFunctional::gaussian(64);
  try {
    boundedness_probe(Spec::f0(), B::d2(1, q), g, range(2, 4));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHermitianElement);
  }
  try {
    multiplication_probe(MomentFunctional::from_moments(std::vector<Scalar>(30, Scalar(0))), range(2, 4));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularGram);
  }
  EXPECT_THROW(multiplication_probe(g, {3, 2}), Error);
  EXPECT_THROW(multiplication_probe(g, {}), Error);
}

TEST(BoundednessProbe, KernelDirectionsAreProjectedOut) {
  // Two atoms: rank 2 Gram at every degree; the probe sees only the quotient.
  const auto mf = MomentFunctional::atomic({{1, 1}, {2, 3}});
  const auto r = boundedness_probe(Spec::gauss_poly(q * q), B::gauss(1), mf, range(1, 6));
  for (double l : r.lambda) EXPECT_NEAR(l, 4.0, 1e-12);
}

TEST(ProbeProperty, MonotoneInDegree) {
  const std::vector<std::pair<Spec, B>> cases{
      {Spec::f0(), B::d2(q, q)},
      {Spec::f1(), B::d2()},
      {Spec::f2(), B::d2()},
      {Spec::gauss_poly(q * q - 1), B::gauss(q)},
  };
  for (const auto& mf : {MomentFunctional::gaussian(64), MomentFunctional::lebesgue_unit_interval(64)}) {
    for (const auto& [spec, x] : cases) {
      const auto r = boundedness_probe(spec, x, mf, range(0, 8));
      for (std::size_t k = 1; k < r.lambda.size(); ++k) EXPECT_GE(r.lambda[k], r.lambda[k - 1] - 1e-9);
    }
  }
}

TEST(LemmaCheck, Examples) {
  Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(2, 2);
  shift(0, 1) = 1.0;
  auto r = operator_norm_lemma_check(shift, 1);
  EXPECT_NEAR(r.numerical_radius, 0.5, 1e-9);
  EXPECT_NEAR(r.norm, 1.0, 1e-12);
  EXPECT_TRUE(r.holds);

  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(2, 2);
  diag(0, 0) = 1.0;
  diag(1, 1) = -1.0;
  r = operator_norm_lemma_check(diag, 1);
  EXPECT_NEAR(r.numerical_radius, 1.0, 1e-12);
  EXPECT_TRUE(r.holds);

  r = operator_norm_lemma_check(Eigen::MatrixXcd::Zero(3, 3), 1);
  EXPECT_EQ(r.numerical_radius, 0.0);
  EXPECT_EQ(r.norm, 0.0);
  EXPECT_TRUE(r.holds);

  EXPECT_THROW(operator_norm_lemma_check(Eigen::MatrixXcd::Zero(2, 3), 1), Error);
}

TEST(LemmaProperty, RandomMatrices) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int t = 0; t < 100; ++t) {
    const int n = dim(rng);
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = {u(rng), u(rng)};
    const auto r = operator_norm_lemma_check(m, static_cast<std::uint64_t>(t), 2000);
    EXPECT_TRUE(r.holds);
    // w(T) is always between ||T||/2 and ||T||.
    EXPECT_GE(r.numerical_radius, 0.5 * r.norm - 1e-9);
    EXPECT_LE(r.numerical_radius, r.norm + 1e-9);
  }
}

}  // namespace
}  // namespace starbimod
