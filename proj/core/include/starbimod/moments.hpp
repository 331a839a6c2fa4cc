// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "starbimod/matrix.hpp"
#include "starbimod/poly.hpp"
#include "starbimod/scalar.hpp"

namespace starbimod {

struct Atom {
  Rational point;
  Rational weight;
};

/// A linear functional f on C[q], f(q^k) = m_k, given either by a finite
/// atomic measure or by an explicit moment sequence.
///
/// Atomic functionals are positive by construction. Moment sequences are
/// only known to be positive once build_gns has factored their Hankel matrix.
class MomentFunctional {
 public:
  /// Throws Error(InvalidArgument) on a negative weight.
  static MomentFunctional atomic(std::vector<Atom> atoms);
  static MomentFunctional from_moments(std::vector<Scalar> moments);

  /// Standard normal distribution: m_{2n} = (2n-1)!!, odd moments 0.
  static MomentFunctional gaussian(std::size_t count);
  /// Lebesgue measure on [0,1]: m_k = 1/(k+1).
  static MomentFunctional lebesgue_unit_interval(std::size_t count);

  bool is_atomic() const { return std::holds_alternative<std::vector<Atom>>(source_); }
  /// Throws Error(InvalidArgument) for moment-sequence functionals.
  const std::vector<Atom>& atoms() const;
  /// Number of stored moments; nullopt when every moment is available.
  std::optional<std::size_t> moment_count() const;

  /// m_k. Throws Error(MomentOutOfRange) past the end of a moment sequence.
  Scalar moment(int k) const;
  /// m_0 .. m_{count-1}
  std::vector<Scalar> moments(std::size_t count) const;
  /// f(p) = sum_k p_k m_k.
  Scalar integrate(const Poly& p) const;

 private:
  explicit MomentFunctional(std::variant<std::vector<Atom>, std::vector<Scalar>> source)
      : source_(std::move(source)) {}

  std::variant<std::vector<Atom>, std::vector<Scalar>> source_;
};

/// GNS inner product <u + N_f, v + N_f> = f(v^+ u), expanded through moments.
Scalar gns_inner(const MomentFunctional& mf, const Poly& u, const Poly& v);

/// Result of an exact symmetric-pivoted LDL^T factorization of a positive
/// semidefinite matrix G.
///
/// With P = pivots (in elimination order), G[P,P] = L D L^T where L is unit
/// lower triangular of size rank x rank and D = diag(diag) > 0.
struct PivotedLdl {
  std::vector<std::size_t> pivots;
  RationalMatrix lower;
  std::vector<Rational> diag;
  std::size_t rank() const { return pivots.size(); }
};

/// Pivots on the largest remaining diagonal entry. Throws Error(NotPositive)
/// on a negative pivot, or on a zero diagonal whose row is not zero.
PivotedLdl pivoted_ldl(const RationalMatrix& g);

/// Basis of {v : G v = 0} by exact row reduction.
std::vector<std::vector<Rational>> null_space(const RationalMatrix& g);

/// Truncated GNS data for a positive functional on polynomials of degree <= N.
///
/// The domain is spanned by the monomials 1, q, ..., q^N; rho_f(a) is
/// multiplication by a and the cyclic vector is the constant 1.
class GnsRealization {
 public:
  const MomentFunctional& functional() const { return mf_; }
  int max_degree() const { return max_degree_; }
  /// G_{jk} = m_{j+k}
  const RationalMatrix& gram() const { return gram_; }
  const PivotedLdl& factorization() const { return ldl_; }
  /// Spans N_f restricted to degree <= N.
  const std::vector<Poly>& kernel_basis() const { return kernel_; }

  static Poly cyclic_vector() { return Poly(1); }
  static Poly rho(const Poly& a, const Poly& b) { return a * b; }
  Scalar inner(const Poly& u, const Poly& v) const { return gns_inner(mf_, u, v); }

 private:
  friend GnsRealization build_gns(const MomentFunctional& mf, int max_degree);
  GnsRealization(MomentFunctional mf, int max_degree, RationalMatrix gram, PivotedLdl ldl, std::vector<Poly> kernel)
      : mf_(std::move(mf)),
        max_degree_(max_degree),
        gram_(std::move(gram)),
        ldl_(std::move(ldl)),
        kernel_(std::move(kernel)) {}

  MomentFunctional mf_;
  int max_degree_;
  RationalMatrix gram_;
  PivotedLdl ldl_;
  std::vector<Poly> kernel_;
};

/// Hankel matrix of m_0..m_{2N}. Throws Error(NotPositive) if a moment is not
/// real, Error(MomentOutOfRange) if the sequence is too short.
RationalMatrix hankel_gram(const MomentFunctional& mf, int max_degree);

/// Builds and verifies the truncated realization. Throws Error(NotPositive)
/// when the moments are not those of a positive functional.
GnsRealization build_gns(const MomentFunctional& mf, int max_degree);

}  // namespace starbimod
