// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "starbimod/cli/io.hpp"
#include "starbimod/error.hpp"

namespace starbimod::cli {
namespace {

const Poly q = Poly::q();
const std::string kData = STARBIMOD_DATA_DIR;

TEST(MeasureJson, AtomicAndMoments) {
  const auto mu3 = measure_from_json(load_json(kData + "/measures/mu3.json"));
  ASSERT_TRUE(mu3.is_atomic());
  EXPECT_EQ(mu3.moment(2), Scalar(2));
  const auto g = measure_from_json(load_json(kData + "/measures/gauss.json"));
  EXPECT_EQ(g.moment(6), Scalar(15));
  EXPECT_EQ(*g.moment_count(), 64u);
  const auto leb = measure_from_json(load_json(kData + "/measures/lebesgue01.json"));
  EXPECT_EQ(leb.moment(9), Scalar(Rational(1, 10)));
  EXPECT_EQ(measure_from_json(to_json(mu3)).atoms().size(), 3u);
  EXPECT_EQ(to_json(measure_from_json(to_json(g))), to_json(g));
}

TEST(MeasureJson, Rejects) {
  EXPECT_THROW(measure_from_json(json::parse(R"({"type":"cloud"})")), Error);
  EXPECT_THROW(measure_from_json(json::parse(R"({"type":"atomic"})")), Error);
  EXPECT_THROW(measure_from_json(json::parse(R"({"type":"atomic","atoms":[{"x":"0","w":"-1"}]})")), Error);
  EXPECT_THROW(measure_from_json(json::parse(R"({"type":"moments","values":["1/0"]})")), Error);
  EXPECT_THROW(load_json(kData + "/measures/missing.json"), Error);
}

TEST(BimodJson, TermsAndTriple) {
  const auto x0 = bimod_from_json(load_json(kData + "/elements/x0.json"));
  EXPECT_EQ(coefficient_triple(x0), (CoefficientTriple{0, 0, 2}));
  const auto t = bimod_from_json(json::parse(R"({"tag":"d2","triple":[["1"],["0","1"],[]]})"));
  EXPECT_EQ(coefficient_triple(t), (CoefficientTriple{1, q, 0}));
  const auto g = bimod_from_json(json::parse(R"({"tag":"gauss","terms":[[["0","1"],["2"]]]})"));
  EXPECT_EQ(g.gauss_poly(), 2 * q);
  EXPECT_TRUE(equal(bimod_from_json(to_json(x0)), x0));
  EXPECT_THROW(bimod_from_json(json::parse(R"({"tag":"gauss","triple":[[],[],[]]})")), Error);
  EXPECT_THROW(bimod_from_json(json::parse(R"({"tag":"d3","terms":[]})")), Error);
}

TEST(PolyJson, Literal) {
  EXPECT_EQ(poly_from_json(json::parse(R"(["1","0","-1/2i"])")),
            Poly({1, 0, Scalar(Rational(0), Rational(-1, 2))}));
  EXPECT_EQ(to_json(q * q), json::parse(R"(["0","0","1"])"));
  EXPECT_THROW(poly_from_json(json::parse(R"("q")")), Error);
}

TEST(Functional, Parse) {
  EXPECT_EQ(parse_functional("F1").kind, FunctionalSpec::Kind::F1);
  EXPECT_EQ(parse_functional("gauss-poly:q^2 - 1").weight, q * q - 1);
  EXPECT_EQ(parse_functional(R"(gauss-poly:["0","1"])").weight, q);
  const auto atoms = parse_functional("gauss-atoms:" + kData + "/measures/harmonic30_weights.json");
  EXPECT_EQ(atoms.atom_values.size(), 30u);
  EXPECT_EQ(atoms.atom_values[4], Rational(5));
  EXPECT_THROW(parse_functional("F3"), Error);
  EXPECT_THROW(parse_functional("gauss-poly:d"), Error);
}

TEST(Element, Parse) {
  EXPECT_TRUE(equal(parse_element("d^2", GeneratorTag::D2), BimodElement::d2()));
  EXPECT_TRUE(equal(parse_element("q*d^2*q", GeneratorTag::D2), BimodElement::d2(q, q)));
  EXPECT_EQ(parse_element("q + 1", GeneratorTag::Gauss).gauss_poly(), q + 1);
  try {
    parse_element("d^3", GeneratorTag::D2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInBimodule);
  }
  EXPECT_EQ(coefficient_triple(parse_element(kData + "/elements/x0.json", GeneratorTag::D2)),
            (CoefficientTriple{0, 0, 2}));
  EXPECT_THROW(parse_element(kData + "/elements/x0.json", GeneratorTag::Gauss), Error);
}

TEST(Format, DoublesAndRanges) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(parse_degree_range("2..5"), (std::vector<int>{2, 3, 4, 5}));
  for (const char* bad : {"5..2", "2-5", "a..b", "2..", "-1..3", "1..2x"}) EXPECT_THROW(parse_degree_range(bad), Error) << bad;
}

}  // namespace
}  // namespace starbimod::cli
