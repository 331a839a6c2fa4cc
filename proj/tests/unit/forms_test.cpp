// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "starbimod/error.hpp"
#include "starbimod/forms.hpp"
#include "starbimod/sampling.hpp"

namespace starbimod {
namespace {

const Poly q = Poly::q();
const Scalar kI = Scalar::i();

ActionTable diag01() { return ActionTable::with_identity_gram(ScalarMatrix{{0, 0}, {0, 1}}); }
const ScalarMatrix kShift{{0, 1}, {0, 0}};

TEST(ActionTable, Validation) {
  EXPECT_THROW(ActionTable(ScalarMatrix{{0, 1}, {0, 0}}, ScalarMatrix::identity(2)), Error);
  EXPECT_THROW(ActionTable(ScalarMatrix::identity(2), ScalarMatrix{{1, kI}, {kI, 1}}), Error);
  EXPECT_THROW(ActionTable(ScalarMatrix::identity(2), ScalarMatrix::identity(3)), Error);
  // q hermitian for a non-identity gram: G R = R^H G with R = G^{-1} S.
  EXPECT_NO_THROW(ActionTable(ScalarMatrix{{0, Scalar(Rational(1, 3))}, {Scalar(Rational(1, 2)), 0}},
                              ScalarMatrix{{3, 0}, {0, 2}}));
}

TEST(FormAction, Examples) {
  const ActionTable act = diag01();
  const FormMatrix x{kShift};
  EXPECT_EQ(form_action(q, x, 1, act), (FormMatrix{ScalarMatrix(2, 2)}));
  EXPECT_EQ(form_action(1, x, q, act), x);
  EXPECT_EQ(form_action(1, x, 1, act), x);
  EXPECT_THROW(form_action(1, FormMatrix{ScalarMatrix::identity(3)}, 1, act), Error);
}

TEST(FormInvolution, Examples) {
  EXPECT_EQ(form_involution(FormMatrix{kShift}), (FormMatrix{ScalarMatrix{{0, 0}, {1, 0}}}));
  const FormMatrix h{ScalarMatrix{{2, kI}, {-kI, 5}}};
  EXPECT_EQ(form_involution(h), h);
  EXPECT_EQ(form_involution(FormMatrix{ScalarMatrix{{kI}}}), (FormMatrix{ScalarMatrix{{-kI}}}));
}

TEST(FormFromOperator, Examples) {
  Sampler s(41);
  const ScalarMatrix t = s.matrix(2, 2);
  EXPECT_EQ(form_from_operator(t, diag01()).m, t);
  const ActionTable g32(ScalarMatrix{{1, 0}, {0, 1}}, ScalarMatrix{{3, 0}, {0, 2}});
  EXPECT_EQ(form_from_operator(kShift, g32).m, (ScalarMatrix{{0, 3}, {0, 0}}));
  EXPECT_EQ(form_from_operator(ScalarMatrix::identity(2), g32).m, g32.gram());
}

TEST(WeakCommutant, Examples) {
  const ActionTable act = diag01();
  EXPECT_TRUE(weak_commutant_test(ScalarMatrix{{2, 0}, {0, kI}}, act));
  EXPECT_FALSE(weak_commutant_test(kShift, act));
  EXPECT_TRUE(weak_commutant_test(ScalarMatrix::identity(2), act));
}

// T commutes with R exactly when it lies in the weak commutant (G = I).
TEST(WeakCommutant, MatchesCommutator) {
  Sampler s(42);
  for (int t = 0; t < 100; ++t) {
    const ActionTable act = ActionTable::with_identity_gram(ScalarMatrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    ScalarMatrix m = s.matrix(3, 3);
    if (t % 2 == 0) m(0, 1) = m(0, 2) = m(1, 0) = m(2, 0) = Scalar(0);
    const auto& r = act.generator();
    EXPECT_EQ(weak_commutant_test(m, act), m * r == r * m);
  }
}

TEST(FormsProperty, StarBimoduleAxioms) {
  Sampler s(43);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(s.uniform(1, 4));
    const ActionTable act = s.action_table(n);
    const FormMatrix x{s.matrix(n, n)};
    const Poly a = s.poly(3), b = s.poly(3);
    EXPECT_EQ(form_action(b, form_action(a, x, 1, act), 1, act), form_action(b * a, x, 1, act));
    EXPECT_EQ(form_action(1, form_action(a, x, 1, act), b, act), form_action(a, form_action(1, x, b, act), 1, act));
    EXPECT_EQ(form_involution(form_action(a, x, b, act)),
              form_action(involution(b), form_involution(x), involution(a), act));
    EXPECT_EQ(form_action(a, x, 1, act), form_involution(form_action(1, form_involution(x), involution(a), act)));
  }
}

TEST(FormsProperty, OperatorFormsIntertwine) {
  Sampler s(44);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(s.uniform(1, 4));
    const ActionTable act = s.action_table(n);
    const ScalarMatrix tm = s.matrix(n, n);
    const Poly a = s.poly(3), b = s.poly(3);
    EXPECT_EQ(form_action(a, form_from_operator(tm, act), b, act),
              form_from_operator(act.represent(a) * tm * act.represent(b), act));
    EXPECT_EQ(form_involution(form_from_operator(tm, act)), form_from_operator(operator_adjoint(tm, act), act));
  }
}

}  // namespace
}  // namespace starbimod
