// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "starbimod/cli/parser.hpp"
#include "starbimod/sampling.hpp"

namespace starbimod::cli {
namespace {

using W = WeylElement;

const W q = W::q();
const W d = W::d();

TEST(Parser, PinnedExamples) {
  EXPECT_EQ(parse_expression("d*q"), q * d + W(1));
  EXPECT_EQ(parse_expression("q^2*d^2 - 2*q*d^2*q + d^2*q^2"), W(2));
  EXPECT_EQ(parse_expression("p*q - q*p"), W(-Scalar::i()));
  EXPECT_EQ(parse_expression("d*q - q*d"), W(1));
}

TEST(Parser, Precedence) {
  EXPECT_EQ(parse_expression("-q^2"), -(q * q));
  EXPECT_EQ(parse_expression("(-q)^2"), q * q);
  EXPECT_EQ(parse_expression("1 - q - d"), W(1) - q - d);
  EXPECT_EQ(parse_expression("2*q + 3*d*q"), Scalar(2) * q + Scalar(3) * (d * q));
  EXPECT_EQ(parse_expression("(q + d)^2"), (q + d) * (q + d));
  EXPECT_EQ(parse_expression("1/2*i"), W(Scalar(Rational(0), Rational(1, 2))));
  EXPECT_EQ(parse_expression("p"), W::p());
  EXPECT_EQ(parse_expression("q^0"), W(1));
  EXPECT_EQ(parse_expression("  q\t*\nd "), q * d);
}

SyntaxError syntax_error(const std::string& src) {
  try {
    parse_expression(src);
  } catch (const SyntaxError& e) {
    return e;
  }
  ADD_FAILURE() << "accepted: " << src;
  return SyntaxError(0, {}, "");
}

TEST(Parser, RejectsJuxtaposition) {
  const auto e = syntax_error("qd");
  EXPECT_EQ(e.offset(), 1u);
  EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
  EXPECT_NE(std::find(e.expected().begin(), e.expected().end(), "'*'"), e.expected().end());
  EXPECT_EQ(syntax_error("2q").offset(), 1u);
  EXPECT_EQ(syntax_error("q (d)").offset(), 2u);
}

TEST(Parser, ErrorOffsetsAndExpectations) {
  auto e = syntax_error("");
  EXPECT_EQ(e.offset(), 0u);
  EXPECT_EQ(e.found(), "end of input");
  EXPECT_EQ(e.expected().size(), 6u);

  e = syntax_error("q + ");
  EXPECT_EQ(e.offset(), 4u);

  e = syntax_error("(q + d");
  EXPECT_EQ(e.offset(), 6u);
  EXPECT_NE(std::find(e.expected().begin(), e.expected().end(), "')'"), e.expected().end());

  e = syntax_error("q^x");
  EXPECT_EQ(e.offset(), 2u);
  EXPECT_EQ(e.expected(), std::vector<std::string>{"number"});

  EXPECT_EQ(syntax_error("q^1/2").offset(), 2u);
  EXPECT_EQ(syntax_error("q^2^2").offset(), 3u);
  EXPECT_EQ(syntax_error("--q").offset(), 1u);
  EXPECT_EQ(syntax_error("q $ d").offset(), 2u);
  EXPECT_EQ(syntax_error("1/0").offset(), 0u);
  EXPECT_EQ(syntax_error("q)").offset(), 1u);
  EXPECT_EQ(syntax_error("q^99999").offset(), 2u);
}

TEST(Parser, AstRecordsOffsets) {
  const ExprPtr e = parse("q + 3*d");
  const auto& bin = std::get<Expr::Binary>(e->node);
  EXPECT_EQ(bin.op, '+');
  EXPECT_EQ(bin.rhs->offset, 4u);
  EXPECT_EQ(std::get<Rational>(std::get<Expr::Binary>(bin.rhs->node).lhs->node), Rational(3));
}

TEST(ParserProperty, PrintParseRoundTrip) {
  Sampler s(81);
  for (int t = 0; t < 500; ++t) {
    const W u = s.weyl(6, 4);
    EXPECT_EQ(parse_expression(to_string(u)), u) << to_string(u);
  }
}

}  // namespace
}  // namespace starbimod::cli
