// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "starbimod/poly.hpp"
#include "starbimod/scalar.hpp"

namespace starbimod {

/// Element of the one-dimensional Weyl algebra, stored in normal order as
/// sum c_{mn} q^m d^n with every q to the left of every d.
///
/// The internal generator is d = i*p, so the defining relation pq - qp = -i
/// becomes the integral rule dq = qd + 1. Zero coefficients are never stored;
/// equality of canonical forms is equality in the algebra.
class WeylElement {
 public:
  /// (q exponent, d exponent)
  using Exponents = std::pair<int, int>;
  using TermMap = std::map<Exponents, Scalar>;

  WeylElement() = default;
  WeylElement(Scalar c);  // NOLINT(google-explicit-constructor)
  WeylElement(long c) : WeylElement(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static WeylElement monomial(int q_exp, int d_exp, Scalar c = Scalar(1));
  static WeylElement q() { return monomial(1, 0); }
  static WeylElement d() { return monomial(0, 1); }
  /// p = -i*d
  static WeylElement p() { return monomial(0, 1, -Scalar::i()); }
  /// Embeds a(q) as a q-only element.
  static WeylElement from_poly(const Poly& a);

  const TermMap& terms() const { return terms_; }
  Scalar coeff(int q_exp, int d_exp) const;
  bool is_zero() const { return terms_.empty(); }

  /// Highest d exponent present; -1 for zero.
  int d_degree() const;
  /// Highest q exponent present; -1 for zero.
  int q_degree() const;

  /// The polynomial a(q) with this = sum_n a_n(q) d^n, for the given n.
  Poly d_coefficient(int d_exp) const;

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const Scalar& c);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(WeylElement a, const Scalar& c) { return a *= c; }
  friend WeylElement operator*(const Scalar& c, WeylElement a) { return a *= c; }
  WeylElement operator-() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

 private:
  void add_term(int q_exp, int d_exp, const Scalar& c);

  TermMap terms_;
};

/// Normal-ordered product.
WeylElement operator*(const WeylElement& u, const WeylElement& v);

/// Antilinear anti-automorphism with q+ = q, d+ = -d.
WeylElement involution(const WeylElement& u);

/// Schroedinger-type action on polynomials: q^m d^n acts as t^m (d/dt)^n.
/// Serves as the independent differential-operator model of the algebra.
Poly apply(const WeylElement& u, const Poly& p);

/// Canonical text form using the expression grammar, e.g. `q^2*d^2 + 4*q*d + 2`.
/// Reparsing the output yields an equal element.
std::string to_string(const WeylElement& u);
std::ostream& operator<<(std::ostream& os, const WeylElement& u);

}  // namespace starbimod
