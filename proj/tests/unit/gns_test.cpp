// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "starbimod/error.hpp"
#include "starbimod/gns.hpp"
#include "starbimod/sampling.hpp"

namespace starbimod {
namespace {

using B = BimodElement;
using Spec = FunctionalSpec;

const Poly q = Poly::q();

MomentFunctional mu3() { return MomentFunctional::atomic({{-1, 1}, {0, 1}, {1, 1}}); }
MomentFunctional atoms012() { return MomentFunctional::atomic({{0, 1}, {1, 1}, {2, 1}}); }

B zero_combination() {
  return B(GeneratorTag::D2, {{-1 * q * q * q, 1}, {3 * q * q, q}, {-3 * q, q * q}, {1, q * q * q}});
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

TEST(FunctionalF, Examples) {
  EXPECT_EQ(functional_F(Spec::f0(), B::d2(), mu3()), Scalar(3));
  EXPECT_EQ(functional_F(Spec::f1(), B::d2(q, q), atoms012()), Scalar(3));
  EXPECT_EQ(functional_F(Spec::f2(), B::d2(1, q * q), mu3()), Scalar(6));
  EXPECT_EQ(functional_F(Spec::gauss_poly(q), B::gauss(q), mu3()), Scalar(2));
  EXPECT_EQ(functional_F(Spec::gauss_atoms({1, 2, 3}), B::gauss(1), atoms012()), Scalar(6));
}

TEST(FunctionalF, Errors) {
  EXPECT_EQ(kind_of([] { functional_F(Spec::f0(), B::gauss(1), mu3()); }), ErrorKind::SpecTagMismatch);
  EXPECT_EQ(kind_of([] { functional_F(Spec::gauss_poly(1), B::d2(), mu3()); }), ErrorKind::SpecTagMismatch);
  EXPECT_EQ(kind_of([] { functional_F(Spec::gauss_atoms({1, 2}), B::gauss(1), mu3()); }),
            ErrorKind::SpecTagMismatch);
  EXPECT_EQ(kind_of([] {
              functional_F(Spec::gauss_atoms({1}), B::gauss(1), MomentFunctional::gaussian(10));
            }),
            ErrorKind::SpecTagMismatch);
  EXPECT_EQ(kind_of([] { functional_F(Spec::f0(), B::d2(Poly::monomial(6), 1), MomentFunctional::gaussian(4)); }),
            ErrorKind::MomentOutOfRange);
}

TEST(ThetaF, Examples) {
  EXPECT_EQ(theta_F(Spec::f1(), B::d2(), q * q), 2 * q);
  Sampler s(61);
  for (int t = 0; t < 20; ++t) {
    const Poly b = s.poly(6);
    EXPECT_EQ(theta_F(Spec::f0(), B::d2(), b), b);
    EXPECT_EQ(theta_F(Spec::f1(), B::d2(), b), derive(b, 1));
    EXPECT_EQ(theta_F(Spec::f2(), B::d2(), b), derive(b, 2));
  }
  EXPECT_EQ(theta_F(Spec::f2(), B::d2(q, q), 1), Poly());
  EXPECT_EQ(kind_of([] { theta_F(Spec::gauss_atoms({1}), B::gauss(1), 1); }), ErrorKind::UnsupportedVariant);
}

TEST(GnsIdentity, Examples) {
  auto r = verify_gns_identity(Spec::f0(), q, B::d2(), q, mu3());
  EXPECT_EQ(r.lhs, Scalar(2));
  EXPECT_EQ(r.rhs, Scalar(2));
  EXPECT_TRUE(r.equal);

  r = verify_gns_identity(Spec::f1(), 1, B::d2(), q, atoms012());
  EXPECT_EQ(r.lhs, Scalar(3));
  EXPECT_TRUE(r.equal);

  r = verify_gns_identity(Spec::gauss_poly(q), q, B::gauss(1), 1, mu3());
  EXPECT_EQ(r.lhs, Scalar(2));
  EXPECT_EQ(r.rhs, Scalar(2));
  EXPECT_TRUE(r.equal);
}

TEST(GnsIdentityProperty, RandomD2) {
  Sampler s(62);
  const std::vector<MomentFunctional> measures{mu3(), atoms012(), MomentFunctional::lebesgue_unit_interval(64),
                                               MomentFunctional::gaussian(64)};
  const std::vector<Spec> specs{Spec::f0(), Spec::f1(), Spec::f2()};
  for (int t = 0; t < 200; ++t) {
    const Spec& spec = specs[static_cast<std::size_t>(t) % 3];
    const auto& mf = measures[static_cast<std::size_t>(t / 3) % 4];
    const auto r = verify_gns_identity(spec, s.poly(6), s.d2_element(4, 4), s.poly(6), mf);
    EXPECT_TRUE(r.equal) << to_string(r.lhs) << " vs " << to_string(r.rhs);
  }
}

TEST(GnsIdentityProperty, RandomGauss) {
  Sampler s(63);
  const std::vector<Poly> weights{1, q, q * q - 1};
  for (int t = 0; t < 100; ++t) {
    const auto r = verify_gns_identity(Spec::gauss_poly(weights[static_cast<std::size_t>(t) % 3]), s.poly(5),
                                       s.gauss_element(5), s.poly(5), MomentFunctional::gaussian(64));
    EXPECT_TRUE(r.equal);
    std::vector<Rational> values{s.rational(), s.rational(), s.rational()};
    EXPECT_TRUE(verify_gns_identity(Spec::gauss_atoms(values), s.poly(5), s.gauss_element(5), s.poly(5), mu3()).equal);
  }
}

TEST(FunctionalProperty, F0AndRealGaussWeightsAreHermitian) {
  Sampler s(64);
  const auto mf = MomentFunctional::lebesgue_unit_interval(64);
  for (int t = 0; t < 200; ++t) {
    const B x = s.d2_element(4, 4);
    EXPECT_EQ(functional_F(Spec::f0(), involution(x), mf), functional_F(Spec::f0(), x, mf).conj());
    const B g = s.gauss_element(5);
    const Spec w = Spec::gauss_poly(s.poly(3, false));
    EXPECT_EQ(functional_F(w, involution(g), mf), functional_F(w, g, mf).conj());
    const Spec wa = Spec::gauss_atoms({s.rational(), s.rational(), s.rational()});
    EXPECT_EQ(functional_F(wa, involution(g), mu3()), functional_F(wa, g, mu3()).conj());
  }
}

// F1 and F2 do not commute with the involution: (d^2 q)^+ = q d^2.
TEST(FunctionalProperty, F1AndF2AreNotHermitian) {
  const auto mf = mu3();
  EXPECT_EQ(functional_F(Spec::f1(), B::d2(1, q), mf), Scalar(3));
  EXPECT_EQ(functional_F(Spec::f1(), involution(B::d2(1, q)), mf), Scalar(0));
  EXPECT_EQ(functional_F(Spec::f2(), B::d2(1, q * q), mf), Scalar(6));
  EXPECT_EQ(functional_F(Spec::f2(), involution(B::d2(1, q * q)), mf), Scalar(0));
}

TEST(ThetaProperty, WellDefinedOnClasses) {
  Sampler s(65);
  for (int t = 0; t < 200; ++t) {
    const B x = s.d2_element(3, 3);
    const B y = x + action(s.poly(2), zero_combination(), s.poly(2));
    const Poly b = s.poly(4);
    for (const Spec& spec : {Spec::f0(), Spec::f1(), Spec::f2()}) {
      EXPECT_EQ(theta_F(spec, x, b), theta_F(spec, y, b));
      EXPECT_EQ(functional_F(spec, x, mu3()), functional_F(spec, y, mu3()));
    }
  }
}

TEST(CauchySchwarz, Examples) {
  auto r = cauchy_schwarz_check(Spec::f0(), q, B::d2(), mu3());
  EXPECT_EQ(r.lhs_sq, 0);
  EXPECT_EQ(r.bound, 6);
  EXPECT_TRUE(r.holds);

  r = cauchy_schwarz_check(Spec::f2(), 1, B::d2(1, q * q), mu3());
  EXPECT_EQ(r.lhs_sq, 36);
  EXPECT_EQ(r.bound, 36);
  EXPECT_TRUE(r.equality);

  const B x = B::d2(q + 1, q);
  r = cauchy_schwarz_check(Spec::f0(), representing_poly(Spec::f0(), x), x, atoms012());
  EXPECT_TRUE(r.equality);
}

TEST(CauchySchwarzProperty, Random) {
  Sampler s(66);
  const auto leb = MomentFunctional::lebesgue_unit_interval(64);
  for (int t = 0; t < 200; ++t) {
    const Spec spec = std::vector<Spec>{Spec::f0(), Spec::f1(), Spec::f2()}[static_cast<std::size_t>(t) % 3];
    const B x = s.d2_element(3, 3);
    EXPECT_TRUE(cauchy_schwarz_check(spec, s.poly(4), x, leb).holds);
    const Poly h = representing_poly(spec, x);
    EXPECT_TRUE(cauchy_schwarz_check(spec, h, x, leb).equality);
    EXPECT_TRUE(cauchy_schwarz_check(Spec::gauss_atoms({s.rational(), s.rational(), s.rational()}), s.poly(4),
                                     s.gauss_element(4), mu3())
                    .holds);
  }
}

TEST(Uniqueness, Examples) {
  const auto reordered = MomentFunctional::atomic({{1, 1}, {0, 1}, {-1, 1}});
  for (int n = 0; n <= 8; ++n) {
    EXPECT_TRUE(verify_uniqueness_intertwiner(mu3(), reordered, n).verified()) << n;
  }
  std::vector<Scalar> point_mass(17, Scalar(0));
  point_mass[0] = 2;
  EXPECT_TRUE(
      verify_uniqueness_intertwiner(MomentFunctional::atomic({{0, 2}}), MomentFunctional::from_moments(point_mass), 8)
          .verified());
  EXPECT_EQ(kind_of([] { verify_uniqueness_intertwiner(mu3(), atoms012(), 2); }), ErrorKind::MomentMismatch);
}

TEST(Uniqueness, MomentsVersusAtoms) {
  Sampler s(67);
  for (int t = 0; t < 20; ++t) {
    const MomentFunctional a = s.atomic_measure(5);
    auto atoms = a.atoms();
    std::reverse(atoms.begin(), atoms.end());
    EXPECT_TRUE(verify_uniqueness_intertwiner(a, MomentFunctional::atomic(atoms), 6).verified());
    EXPECT_TRUE(verify_uniqueness_intertwiner(MomentFunctional::from_moments(a.moments(17)), a, 8).verified());
  }
}

}  // namespace
}  // namespace starbimod
