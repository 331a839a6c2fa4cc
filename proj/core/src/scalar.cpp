// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include "starbimod/scalar.hpp"

#include <cctype>
#include <ostream>

#include "starbimod/error.hpp"

namespace starbimod {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_scalar(std::string_view text) {
  throw Error(ErrorKind::InvalidArgument, "malformed scalar '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) {
      throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    }
  }
  Rational r(n, d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

double to_double(const Rational& r) { return r.get_d(); }

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  const Rational den = o.norm_sq();
  if (sgn(den) == 0) throw Error(ErrorKind::InvalidArgument, "division by zero scalar");
  Rational re = (re_ * o.re_ + im_ * o.im_) / den;
  Rational im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const Scalar& s) {
  if (s.is_real()) return to_string(s.re());
  if (sgn(s.re()) == 0) return to_string(s.im()) + "i";
  return to_string(s.re()) + "+" + to_string(s.im()) + "i";
}

Scalar parse_scalar(std::string_view text) {
  if (text.empty()) bad_scalar(text);
  if (text.back() != 'i') return Scalar(parse_rational(text));

  std::string_view body = text.substr(0, text.size() - 1);
  if (body.empty()) return Scalar::i();
  if (body == "-") return -Scalar::i();

  // Split at the sign that separates the real and imaginary parts; a leading
  // sign belongs to the first rational.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = 1; k < body.size(); ++k) {
    if (body[k] == '+' || (body[k] == '-' && body[k - 1] != '+')) {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return Scalar(Rational(0), parse_rational(body));

  const std::string_view re_text = body.substr(0, split);
  std::string_view im_text = body.substr(split);
  if (im_text.front() == '+') im_text.remove_prefix(1);
  if (im_text.empty() || im_text == "-") {
    // `a+i` / `a-i`
    return Scalar(parse_rational(re_text), Rational(im_text.empty() ? 1 : -1));
  }
  return Scalar(parse_rational(re_text), parse_rational(im_text));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

}  // namespace starbimod
