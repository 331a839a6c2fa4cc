// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include "starbimod/bimodule.hpp"

#include "starbimod/error.hpp"

namespace starbimod {

std::string to_string(GeneratorTag tag) { return tag == GeneratorTag::D2 ? "d2" : "gauss"; }

GeneratorTag parse_tag(const std::string& text) {
  if (text == "d2") return GeneratorTag::D2;
  if (text == "gauss") return GeneratorTag::Gauss;
  throw Error(ErrorKind::InvalidArgument, "unknown generator tag '" + text + "'");
}

namespace {

void require_same_tag(const BimodElement& x, const BimodElement& y) {
  if (x.tag() != y.tag()) {
    throw Error(ErrorKind::TagMismatch, to_string(x.tag()) + " vs " + to_string(y.tag()));
  }
}

void require_d2(const BimodElement& x) {
  if (x.tag() != GeneratorTag::D2) throw Error(ErrorKind::TagMismatch, "expected a d2 element");
}

}  // namespace

BimodElement::BimodElement(GeneratorTag tag, std::vector<Term> terms)
    : tag_(tag), terms_(std::move(terms)) {
  canonicalize();
}

void BimodElement::canonicalize() {
  if (tag_ == GeneratorTag::Gauss) {
    Poly p;
    for (const auto& [a, b] : terms_) p += a * b;
    terms_.clear();
    terms_.emplace_back(Poly(1), std::move(p));
    return;
  }
  std::erase_if(terms_, [](const Term& t) { return t.first.is_zero() || t.second.is_zero(); });
}

Poly BimodElement::gauss_poly() const {
  if (tag_ != GeneratorTag::Gauss) throw Error(ErrorKind::TagMismatch, "expected a gauss element");
  return terms_.front().second;
}

BimodElement& BimodElement::operator+=(const BimodElement& o) {
  require_same_tag(*this, o);
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonicalize();
  return *this;
}

BimodElement& BimodElement::operator-=(const BimodElement& o) {
  require_same_tag(*this, o);
  for (const auto& [a, b] : o.terms_) terms_.emplace_back(-a, b);
  canonicalize();
  return *this;
}

BimodElement& BimodElement::operator*=(const Scalar& c) {
  for (auto& t : terms_) t.first *= c;
  canonicalize();
  return *this;
}

BimodElement action(const Poly& a, const BimodElement& x, const Poly& b) {
  std::vector<BimodElement::Term> terms;
  terms.reserve(x.terms().size());
  for (const auto& [aj, bj] : x.terms()) terms.emplace_back(a * aj, bj * b);
  return BimodElement(x.tag(), std::move(terms));
}

BimodElement involution(const BimodElement& x) {
  std::vector<BimodElement::Term> terms;
  terms.reserve(x.terms().size());
  for (const auto& [aj, bj] : x.terms()) terms.emplace_back(involution(bj), involution(aj));
  return BimodElement(x.tag(), std::move(terms));
}

WeylElement to_weyl(const BimodElement& x) {
  require_d2(x);
  const WeylElement d2 = WeylElement::monomial(0, 2);
  WeylElement out;
  for (const auto& [aj, bj] : x.terms()) {
    out += WeylElement::from_poly(aj) * d2 * WeylElement::from_poly(bj);
  }
  return out;
}

CoefficientTriple coefficient_triple(const BimodElement& x) {
  const WeylElement w = to_weyl(x);
  return {w.d_coefficient(2), w.d_coefficient(1) * Scalar(Rational(1, 2)), w.d_coefficient(0)};
}

BimodElement from_triple(const CoefficientTriple& t) {
  const Poly q = Poly::q();
  const Poly half_h2 = t.h2 * Scalar(Rational(1, 2));
  std::vector<BimodElement::Term> terms{
      {t.h0, Poly(1)},
      // (a, q) - (a q, 1) has triple (0, a, 0)
      {t.h1, q},
      {-(t.h1 * q), Poly(1)},
      // (a, q^2) - 2 (a q, q) + (a q^2, 1) has triple (0, 0, 2a)
      {half_h2, q * q},
      {half_h2 * q * Scalar(-2), q},
      {half_h2 * q * q, Poly(1)},
  };
  return BimodElement(GeneratorTag::D2, std::move(terms));
}

BimodElement from_weyl(const WeylElement& u) {
  if (u.d_degree() > 2) {
    throw Error(ErrorKind::NotInBimodule,
                "element of d-degree " + std::to_string(u.d_degree()) + " is not in Lin{a d^2 b}");
  }
  return from_triple({u.d_coefficient(2), u.d_coefficient(1) * Scalar(Rational(1, 2)), u.d_coefficient(0)});
}

bool equal(const BimodElement& x, const BimodElement& y) {
  require_same_tag(x, y);
  if (x.tag() == GeneratorTag::Gauss) return x.gauss_poly() == y.gauss_poly();
  return coefficient_triple(x) == coefficient_triple(y);
}

bool is_hermitian(const BimodElement& x) { return equal(x, involution(x)); }

WeylElement vartheta(const BimodElement& x) {
  const CoefficientTriple t = coefficient_triple(x);
  const WeylElement image = WeylElement::from_poly(t.h0) * WeylElement::d() + WeylElement::from_poly(t.h1);
  return Scalar::i() * image;
}

std::vector<Poly> theta2_schrodinger(const BimodElement& x, int max_degree) {
  if (max_degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree bound");
  const WeylElement image = vartheta(x);
  std::vector<Poly> table;
  table.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (int k = 0; k <= max_degree; ++k) table.push_back(apply(image, Poly::monomial(k)));
  return table;
}

bool verify_quadratic_certificate(const BimodElement& target, const std::vector<CertificateTerm>& cert) {
  BimodElement sum = BimodElement::zero(target.tag());
  for (const auto& [a, y] : cert) {
    require_same_tag(target, y);
    if (!is_hermitian(y)) throw Error(ErrorKind::NotHermitian, "certificate generator is not hermitian");
    sum += action(involution(a), y, a);
  }
  return equal(sum, target);
}

}  // namespace starbimod
