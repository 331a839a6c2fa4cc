// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include "starbimod/cli/parser.hpp"

#include <cctype>

namespace starbimod::cli {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& it : items) s += (s.empty() ? "" : ", ") + it;
  return s;
}

constexpr unsigned kMaxExponent = 1000;

enum class Tok { Q, P, D, I, Number, LParen, RParen, Plus, Minus, Star, Caret, End, Bad };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::Q: return "'q'";
    case Tok::P: return "'p'";
    case Tok::D: return "'d'";
    case Tok::I: return "'i'";
    case Tok::Number: return "number";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Caret: return "'^'";
    case Tok::End: return "end of input";
    case Tok::Bad: return "invalid character";
  }
  return "?";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < src.size()) {
    const char c = src[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
      continue;
    }
    const std::size_t start = k;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
      if (k + 1 < src.size() && src[k] == '/' && std::isdigit(static_cast<unsigned char>(src[k + 1]))) {
        ++k;
        while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
      }
      out.push_back({Tok::Number, start, std::string(src.substr(start, k - start))});
      continue;
    }
    Tok t = Tok::Bad;
    switch (c) {
      case 'q': t = Tok::Q; break;
      case 'p': t = Tok::P; break;
      case 'd': t = Tok::D; break;
      case 'i': t = Tok::I; break;
      case '(': t = Tok::LParen; break;
      case ')': t = Tok::RParen; break;
      case '+': t = Tok::Plus; break;
      case '-': t = Tok::Minus; break;
      case '*': t = Tok::Star; break;
      case '^': t = Tok::Caret; break;
      default: break;
    }
    out.push_back({t, start, std::string(1, c)});
    ++k;
  }
  out.push_back({Tok::End, src.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    expect_end({Tok::Plus, Tok::Minus, Tok::Star, Tok::Caret});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::vector<Tok> expected) const {
    std::vector<std::string> names;
    for (Tok t : expected) names.push_back(describe(t));
    const Token& tok = peek();
    throw SyntaxError(tok.offset, std::move(names), tok.kind == Tok::End ? "end of input" : "'" + tok.text + "'");
  }

  // Tokens that may legally follow a complete factor; used for error reporting.
  void expect_end(std::vector<Tok> continuations) {
    if (peek().kind == Tok::End) return;
    continuations.push_back(Tok::End);
    fail(continuations);
  }

  static ExprPtr make(decltype(Expr::node) node, std::size_t offset) {
    auto e = std::make_unique<Expr>();
    e->node = std::move(node);
    e->offset = offset;
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = next();
      ExprPtr rhs = term();
      const std::size_t at = lhs->offset;
      lhs = make(Expr::Binary{op.text[0], std::move(lhs), std::move(rhs)}, at);
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (peek().kind == Tok::Star) {
      next();
      ExprPtr rhs = factor();
      const std::size_t at = lhs->offset;
      lhs = make(Expr::Binary{'*', std::move(lhs), std::move(rhs)}, at);
    }
    return lhs;
  }

  ExprPtr factor() {
    const std::size_t at = peek().offset;
    bool negate = false;
    if (peek().kind == Tok::Minus) {
      next();
      negate = true;
    }
    ExprPtr e = atom();
    if (peek().kind == Tok::Caret) {
      next();
      if (peek().kind != Tok::Number || peek().text.find('/') != std::string::npos) fail({Tok::Number});
      const Token& n = next();
      if (n.text.size() > 4 || std::stoul(n.text) > kMaxExponent) {
        throw SyntaxError(n.offset, {"exponent <= " + std::to_string(kMaxExponent)}, "'" + n.text + "'");
      }
      e = make(Expr::Power{std::move(e), static_cast<unsigned>(std::stoul(n.text))}, at);
    }
    if (negate) e = make(Expr::Negate{std::move(e)}, at);
    // An atom directly followed by another atom is juxtaposition.
    switch (peek().kind) {
      case Tok::Q: case Tok::P: case Tok::D: case Tok::I: case Tok::Number: case Tok::LParen:
        fail({Tok::Caret, Tok::Star, Tok::Plus, Tok::Minus, Tok::RParen, Tok::End});
      default: break;
    }
    return e;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Q: next(); return make(Expr::Symbol::Q, t.offset);
      case Tok::P: next(); return make(Expr::Symbol::P, t.offset);
      case Tok::D: next(); return make(Expr::Symbol::D, t.offset);
      case Tok::I: next(); return make(Expr::Symbol::I, t.offset);
      case Tok::Number: {
        next();
        Rational r;
        try {
          r = parse_rational(t.text);
        } catch (const Error&) {
          throw SyntaxError(t.offset, {"nonzero denominator"}, "'" + t.text + "'");
        }
        return make(r, t.offset);
      }
      case Tok::LParen: {
        next();
        ExprPtr e = expr();
        if (peek().kind != Tok::RParen) fail({Tok::Plus, Tok::Minus, Tok::Star, Tok::RParen});
        next();
        e->offset = t.offset;
        return e;
      }
      default: fail({Tok::Q, Tok::P, Tok::D, Tok::I, Tok::Number, Tok::LParen});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

WeylElement power(const WeylElement& base, unsigned n) {
  WeylElement result(1);
  WeylElement b = base;
  while (n > 0) {
    if (n & 1U) result = result * b;
    n >>= 1U;
    if (n > 0) b = b * b;
  }
  return result;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, std::string found)
    : Error(ErrorKind::SyntaxError,
            "at byte " + std::to_string(offset) + ": expected " + join(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

ExprPtr parse(std::string_view src) { return Parser(src).parse_all(); }

WeylElement evaluate(const Expr& e) {
  struct Visitor {
    WeylElement operator()(Expr::Symbol s) const {
      switch (s) {
        case Expr::Symbol::Q: return WeylElement::q();
        case Expr::Symbol::P: return WeylElement::p();
        case Expr::Symbol::D: return WeylElement::d();
        case Expr::Symbol::I: return WeylElement(Scalar::i());
      }
      return {};
    }
    WeylElement operator()(const Rational& r) const { return WeylElement(Scalar(r)); }
    WeylElement operator()(const Expr::Binary& b) const {
      const WeylElement l = evaluate(*b.lhs);
      const WeylElement r = evaluate(*b.rhs);
      if (b.op == '+') return l + r;
      if (b.op == '-') return l - r;
      return l * r;
    }
    WeylElement operator()(const Expr::Negate& n) const { return -evaluate(*n.operand); }
    WeylElement operator()(const Expr::Power& p) const { return power(evaluate(*p.base), p.exponent); }
  };
  return std::visit(Visitor{}, e.node);
}

WeylElement parse_expression(std::string_view src) { return evaluate(*parse(src)); }

}  // namespace starbimod::cli
