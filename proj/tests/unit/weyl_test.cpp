// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "starbimod/sampling.hpp"
#include "starbimod/weyl.hpp"

namespace starbimod {
namespace {

using W = WeylElement;

const W q = W::q();
const W d = W::d();

W pow(const W& u, int n) {
  W r(1);
  for (int k = 0; k < n; ++k) r = r * u;
  return r;
}

TEST(WeylProduct, Examples) {
  EXPECT_EQ(d * q, q * d + W(1));
  EXPECT_EQ(d * d * q, W::monomial(1, 2) + W::monomial(0, 1, 2));
  EXPECT_EQ(pow(d, 2) * pow(q, 2), W::monomial(2, 2) + W::monomial(1, 1, 4) + W(2));
}

TEST(WeylProduct, DefiningRelation) {
  EXPECT_EQ(d * q - q * d, W(1));
  const W p = W::p();
  EXPECT_EQ(p * q - q * p, W(-Scalar::i()));
}

TEST(WeylProduct, UnitAndZero) {
  const W u = W::monomial(3, 2, Scalar(5)) + W::monomial(0, 1, Scalar::i());
  EXPECT_EQ(W(1) * u, u);
  EXPECT_EQ(u * W(1), u);
  EXPECT_TRUE((W() * u).is_zero());
}

TEST(WeylInvolution, Examples) {
  EXPECT_EQ(involution(d * d), d * d);
  EXPECT_EQ(involution(q * d), -(q * d) - W(1));
  EXPECT_EQ(involution(pow(q, 3)), pow(q, 3));
  EXPECT_EQ(involution(W::p()), W::p());
  EXPECT_EQ(involution(W(Scalar::i())), W(-Scalar::i()));
}

TEST(WeylApply, Examples) {
  const Poly t = Poly::q();
  EXPECT_EQ(apply(d * d, t * t * t), 6 * t);
  EXPECT_EQ(apply(q * d, t * t), 2 * t * t);
  EXPECT_EQ(apply(d * q, t), 2 * t);
}

TEST(WeylAccessors, Coefficients) {
  const W u = W::monomial(2, 2) + W::monomial(1, 1, 4) + W(2);
  EXPECT_EQ(u.d_degree(), 2);
  EXPECT_EQ(u.q_degree(), 2);
  EXPECT_EQ(u.d_coefficient(1), 4 * Poly::q());
  EXPECT_EQ(u.d_coefficient(0), Poly(2));
  EXPECT_EQ(W().d_degree(), -1);
}

TEST(WeylRender, Canonical) {
  EXPECT_EQ(to_string(W::monomial(2, 2) + W::monomial(1, 1, 4) + W(2)), "q^2*d^2 + 4*q*d + 2");
  EXPECT_EQ(to_string(W(1)), "1");
  EXPECT_EQ(to_string(W(-Scalar::i())), "-i");
  EXPECT_EQ(to_string(W()), "0");
}

// Word rewriting and the closed-form Leibniz product agree.
TEST(WeylProperty, ProductMatchesWordRewriting) {
  Sampler s(21);
  for (int t = 0; t < 200; ++t) {
    const W u = s.weyl(4, 3), v = s.weyl(4, 3);
    EXPECT_EQ(u * v, oracle::word_product(u, v));
  }
}

TEST(WeylProperty, OracleSoundness) {
  Sampler s(22);
  for (int t = 0; t < 500; ++t) {
    const W u = s.weyl(6, 3), v = s.weyl(6, 3);
    const W uv = u * v;
    for (int k = 0; k <= 12; ++k) {
      const Poly m = Poly::monomial(k);
      ASSERT_EQ(apply(uv, m), apply(u, apply(v, m))) << to_string(u) << " | " << to_string(v);
    }
  }
}

TEST(WeylProperty, Associativity) {
  Sampler s(23);
  for (int t = 0; t < 200; ++t) {
    const W a = s.weyl(4, 3), b = s.weyl(4, 3), c = s.weyl(4, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(WeylProperty, InvolutionAntiMultiplicative) {
  Sampler s(24);
  for (int t = 0; t < 300; ++t) {
    const W u = s.weyl(5, 3), v = s.weyl(5, 3);
    EXPECT_EQ(involution(u * v), involution(v) * involution(u));
    EXPECT_EQ(involution(involution(u)), u);
  }
}

// Distinct canonical forms are told apart by the action on low monomials.
TEST(WeylProperty, FaithfulAtTruncation) {
  Sampler s(25);
  for (int t = 0; t < 300; ++t) {
    const W u = s.weyl(4, 3);
    const W v = t % 3 == 0 ? u : s.weyl(4, 3);
    const int bound = std::max(u.d_degree(), v.d_degree()) + std::max(u.q_degree(), v.q_degree()) + 1;
    bool same = true;
    for (int k = 0; k <= bound; ++k) same = same && apply(u, Poly::monomial(k)) == apply(v, Poly::monomial(k));
    EXPECT_EQ(same, u == v);
  }
}

}  // namespace
}  // namespace starbimod
