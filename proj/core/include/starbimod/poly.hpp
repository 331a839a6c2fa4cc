// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "starbimod/scalar.hpp"

namespace starbimod {

/// Univariate polynomial in q with Gaussian-rational coefficients: an element
/// of the coefficient *-algebra C[q].
///
/// Dense storage, index k holds the coefficient of q^k. Trailing zeros are
/// never stored, so the zero polynomial is the empty sequence and equality is
/// structural.
class Poly {
 public:
  Poly() = default;
  Poly(Scalar constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Scalar(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Scalar> coeffs);
  Poly(std::initializer_list<Scalar> coeffs);

  static Poly monomial(int k, Scalar c = Scalar(1));
  static Poly q() { return monomial(1); }

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  /// Coefficient of q^k; zero beyond the degree.
  Scalar coeff(int k) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool has_real_coefficients() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend Poly operator*(Poly a, long c) { return a *= Scalar(c); }
  friend Poly operator*(long c, Poly a) { return a *= Scalar(c); }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim();

  std::vector<Scalar> coeffs_;
};

/// Coefficient-wise complex conjugation (q is hermitian).
Poly involution(const Poly& p);

/// order-fold formal derivative d/dq.
Poly derive(const Poly& p, int order = 1);

/// Exact Horner evaluation at a rational point.
Scalar eval(const Poly& p, const Rational& point);

/// Polynomial literal: one scalar string per coefficient, lowest degree first.
std::vector<std::string> to_literal(const Poly& p);
Poly from_literal(const std::vector<std::string>& literal);

/// Human-readable form, e.g. `1 + -1/2i*q^2`.
std::string to_string(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace starbimod
