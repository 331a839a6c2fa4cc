// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "starbimod/error.hpp"
#include "starbimod/weyl.hpp"

namespace starbimod::cli {

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := ['-'] atom ('^' uint)?
//   atom   := 'q' | 'p' | 'd' | 'i' | rational | '(' expr ')'
// Juxtaposition is not multiplication.

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Symbol { Q, P, D, I };
  struct Binary {
    char op;  // '+', '-', '*'
    ExprPtr lhs;
    ExprPtr rhs;
  };
  struct Negate {
    ExprPtr operand;
  };
  struct Power {
    ExprPtr base;
    unsigned exponent;
  };

  std::variant<Symbol, Rational, Binary, Negate, Power> node;
  std::size_t offset = 0;  // byte offset of the first token
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, std::string found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Throws SyntaxError.
ExprPtr parse(std::string_view src);

/// Evaluates in the Weyl algebra, with p = -i d.
WeylElement evaluate(const Expr& e);

/// parse + evaluate.
WeylElement parse_expression(std::string_view src);

}  // namespace starbimod::cli
