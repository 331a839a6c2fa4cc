// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "starbimod/bimodule.hpp"
#include "starbimod/moments.hpp"

namespace starbimod {

/// Hermitian-candidate functional F on a bimodule, paired with a moment
/// functional f on C[q].
///
///   F0, F1, F2       on X = Lin{a d^2 b}: F_k(x) = f(h_k) for the coefficient
///                    triple (h0, h1, h2) of x.
///   GaussPolyWeight  on e^{-q^2} C[q]:    F(e^{-q^2} p) = f(w p).
///   GaussAtomWeight  on e^{-q^2} C[q] with an atomic f: the weight is a table
///                    of values on the atoms, F(e^{-q^2} p) = sum_i mu_i w_i p(x_i).
struct FunctionalSpec {
  enum class Kind { F0, F1, F2, GaussPolyWeight, GaussAtomWeight };

  Kind kind = Kind::F0;
  Poly weight;                      // GaussPolyWeight
  std::vector<Rational> atom_values;  // GaussAtomWeight

  static FunctionalSpec f0() { return {Kind::F0, {}, {}}; }
  static FunctionalSpec f1() { return {Kind::F1, {}, {}}; }
  static FunctionalSpec f2() { return {Kind::F2, {}, {}}; }
  static FunctionalSpec gauss_poly(Poly w) { return {Kind::GaussPolyWeight, std::move(w), {}}; }
  static FunctionalSpec gauss_atoms(std::vector<Rational> values) {
    return {Kind::GaussAtomWeight, {}, std::move(values)};
  }

  GeneratorTag required_tag() const {
    return kind == Kind::F0 || kind == Kind::F1 || kind == Kind::F2 ? GeneratorTag::D2 : GeneratorTag::Gauss;
  }
};

std::string to_string(const FunctionalSpec& spec);

/// F(x), exact. Throws Error(SpecTagMismatch) for incompatible spec/element or
/// spec/measure combinations.
Scalar functional_F(const FunctionalSpec& spec, const BimodElement& x, const MomentFunctional& mf);

/// theta_F(x) rho_f(b) phi_f as a polynomial:
///   F0: sum a_j b_j b    F1: sum a_j (b_j b)'    F2: sum a_j (b_j b)''
///   GaussPolyWeight: w p b
/// Throws Error(UnsupportedVariant) for GaussAtomWeight, whose operator leaves
/// polynomial space; use theta_F_atoms.
Poly theta_F(const FunctionalSpec& spec, const BimodElement& x, const Poly& b);

/// theta_F(x) in atom coordinates: (v_i) -> (w_i p(x_i) v_i). GaussAtomWeight only.
std::vector<Scalar> theta_F_atoms(const FunctionalSpec& spec, const BimodElement& x, const MomentFunctional& mf,
                                  const std::vector<Scalar>& coords);

struct GnsIdentityReport {
  Scalar lhs;  // F(a x b)
  Scalar rhs;  // <theta_F(x) rho_f(b) phi_f, rho_f(a^+) phi_f>
  bool equal = false;
};

/// Checks F(a x b) = <theta_F(x) rho_f(b) phi_f, rho_f(a^+) phi_f> exactly. The
/// left side goes through the Weyl normal form of a x b; the right side
/// through theta_F and the GNS inner product.
GnsIdentityReport verify_gns_identity(const FunctionalSpec& spec, const Poly& a, const BimodElement& x,
                                      const Poly& b, const MomentFunctional& mf);

struct CauchySchwarzReport {
  Rational lhs_sq;  // |F(a^+ x)|^2
  Rational bound;   // f(h^+ h) f(a^+ a)
  bool holds = false;
  bool equality = false;
};

/// |F(a^+ x)|^2 <= C_x f(a^+ a) with C_x = f(h^+ h), where h is the polynomial
/// (or atom table) that F integrates against.
CauchySchwarzReport cauchy_schwarz_check(const FunctionalSpec& spec, const Poly& a, const BimodElement& x,
                                         const MomentFunctional& mf);

/// The coefficient h with F(a^+ x) = f(a^+ h). Polynomial variants only.
Poly representing_poly(const FunctionalSpec& spec, const BimodElement& x);

struct UniquenessReport {
  int max_degree = 0;
  bool second_is_atomic = false;
  bool isometry = false;      // U^H G_2 U = G_1
  bool cyclic = false;        // U phi_f = psi
  bool intertwines = false;   // U rho_f(q) = rho(q) U on degrees < N
  bool kernel_to_null = false;  // U maps N_f to null vectors
  bool verified() const { return isometry && cyclic && intertwines && kernel_to_null; }
};

/// Builds U: b + N_f1 -> rho_2(b) psi for two presentations of one functional
/// and checks it exactly. mf2 is realized in atom coordinates when atomic and
/// in monomial coordinates otherwise. Throws Error(MomentMismatch) when the
/// moments differ below 2N+1.
UniquenessReport verify_uniqueness_intertwiner(const MomentFunctional& mf1, const MomentFunctional& mf2,
                                               int max_degree);

}  // namespace starbimod
