// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include "starbimod/poly.hpp"

#include <ostream>

#include "starbimod/error.hpp"

namespace starbimod {

Poly::Poly(Scalar constant) {
  coeffs_.push_back(std::move(constant));
  trim();
}

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::monomial(int k, Scalar c) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative monomial degree");
  std::vector<Scalar> v(static_cast<std::size_t>(k) + 1);
  v.back() = std::move(c);
  return Poly(std::move(v));
}

Scalar Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return Scalar();
  return coeffs_[static_cast<std::size_t>(k)];
}

bool Poly::has_real_coefficients() const {
  for (const auto& c : coeffs_) {
    if (!c.is_real()) return false;
  }
  return true;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t j = 0; j < a.coeffs_.size(); ++j) {
    if (a.coeffs_[j].is_zero()) continue;
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
      out[j + k] += a.coeffs_[j] * b.coeffs_[k];
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

Poly involution(const Poly& p) {
  std::vector<Scalar> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(c.conj());
  return Poly(std::move(v));
}

Poly derive(const Poly& p, int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative derivative order");
  if (order > p.degree()) return Poly();
  std::vector<Scalar> v(static_cast<std::size_t>(p.degree() - order + 1));
  for (int k = order; k <= p.degree(); ++k) {
    // k (k-1) ... (k-order+1)
    long falling = 1;
    for (int j = 0; j < order; ++j) falling *= (k - j);
    v[static_cast<std::size_t>(k - order)] = p.coeff(k) * Scalar(falling);
  }
  return Poly(std::move(v));
}

Scalar eval(const Poly& p, const Rational& point) {
  Scalar acc;
  const Scalar t(point);
  for (int k = p.degree(); k >= 0; --k) {
    acc *= t;
    acc += p.coeff(k);
  }
  return acc;
}

std::vector<std::string> to_literal(const Poly& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

Poly from_literal(const std::vector<std::string>& literal) {
  std::vector<Scalar> v;
  v.reserve(literal.size());
  for (const auto& s : literal) v.push_back(parse_scalar(s));
  return Poly(std::move(v));
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Scalar& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += to_string(c);
      continue;
    }
    if (c != Scalar(1)) out += to_string(c) + "*";
    out += k == 1 ? std::string("q") : "q^" + std::to_string(k);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace starbimod
