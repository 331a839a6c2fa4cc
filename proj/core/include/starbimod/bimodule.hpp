// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "starbimod/poly.hpp"
#include "starbimod/weyl.hpp"

namespace starbimod {

/// Generator of a concrete *-bimodule over C[q].
///
///   D2    the element d^2 of the Weyl algebra; X = Lin{a d^2 b}
///   Gauss the weight e^{-q^2}; X = e^{-q^2} C[q]
enum class GeneratorTag { D2, Gauss };

std::string to_string(GeneratorTag tag);
/// Accepts "d2" and "gauss". Throws Error(InvalidArgument) otherwise.
GeneratorTag parse_tag(const std::string& text);

/// sum_j a_j * g * b_j for a generator g.
///
/// Gauss elements are kept in the canonical single-pair form (1, p), since
/// a e^{-q^2} b = e^{-q^2} (ab). D2 term lists are kept as given; their
/// semantic class is the coefficient triple.
class BimodElement {
 public:
  using Term = std::pair<Poly, Poly>;

  BimodElement() = default;
  BimodElement(GeneratorTag tag, std::vector<Term> terms);

  static BimodElement d2() { return BimodElement(GeneratorTag::D2, {{Poly(1), Poly(1)}}); }
  static BimodElement d2(Poly a, Poly b) {
    return BimodElement(GeneratorTag::D2, {{std::move(a), std::move(b)}});
  }
  /// e^{-q^2} * p
  static BimodElement gauss(Poly p) { return BimodElement(GeneratorTag::Gauss, {{Poly(1), std::move(p)}}); }
  static BimodElement zero(GeneratorTag tag) { return BimodElement(tag, {}); }

  GeneratorTag tag() const { return tag_; }
  const std::vector<Term>& terms() const { return terms_; }
  /// For Gauss elements: the polynomial p with x = e^{-q^2} p.
  Poly gauss_poly() const;

  /// Formal sum; throws Error(TagMismatch) across tags.
  BimodElement& operator+=(const BimodElement& o);
  BimodElement& operator-=(const BimodElement& o);
  BimodElement& operator*=(const Scalar& c);
  friend BimodElement operator+(BimodElement a, const BimodElement& b) { return a += b; }
  friend BimodElement operator-(BimodElement a, const BimodElement& b) { return a -= b; }
  friend BimodElement operator*(const Scalar& c, BimodElement a) { return a *= c; }

 private:
  void canonicalize();

  GeneratorTag tag_ = GeneratorTag::D2;
  std::vector<Term> terms_;
};

/// Coefficients of the Weyl normal form h0 d^2 + 2 h1 d + h2 of a D2 element.
struct CoefficientTriple {
  Poly h0;
  Poly h1;
  Poly h2;
  friend bool operator==(const CoefficientTriple&, const CoefficientTriple&) = default;
};

/// a * x * b, termwise (a a_j, b_j b).
BimodElement action(const Poly& a, const BimodElement& x, const Poly& b);

/// (a_j, b_j) -> (b_j^+, a_j^+); both generators are hermitian.
BimodElement involution(const BimodElement& x);

/// The element as a normal-ordered Weyl element. D2 only.
WeylElement to_weyl(const BimodElement& x);

/// Complete invariant of a D2 element, read off its Weyl embedding.
/// Throws Error(TagMismatch) for Gauss elements.
CoefficientTriple coefficient_triple(const BimodElement& x);

/// A D2 element with the given triple.
BimodElement from_triple(const CoefficientTriple& t);

/// A D2 element equal to u; throws Error(NotInBimodule) if u has d-degree > 2.
BimodElement from_weyl(const WeylElement& u);

/// Semantic equality in X. Throws Error(TagMismatch) if tags differ.
bool equal(const BimodElement& x, const BimodElement& y);

bool is_hermitian(const BimodElement& x);

/// The bimodule map X_2 -> X_1 into the Weyl algebra, normalized as
/// f d^2 g -> i f d g so that it is *-preserving: returns i (h0 d + h1).
WeylElement vartheta(const BimodElement& x);

/// theta_2(x) = pi(vartheta(x)) on the monomials q^0..q^max_degree, where pi
/// is the Schroedinger representation (q as t, d as d/dt).
std::vector<Poly> theta2_schrodinger(const BimodElement& x, int max_degree);

struct CertificateTerm {
  Poly a;
  BimodElement y;
};

/// True iff target equals sum_j a_j^+ y_j a_j. Throws Error(NotHermitian) if
/// some y_j is not hermitian and Error(TagMismatch) on mixed generators.
bool verify_quadratic_certificate(const BimodElement& target, const std::vector<CertificateTerm>& cert);

}  // namespace starbimod
