// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include "starbimod/sampling.hpp"

#include <set>

namespace starbimod {

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational Sampler::rational() {
  Rational r(uniform(-6, 6), uniform(1, 4));
  r.canonicalize();
  return r;
}

Scalar Sampler::scalar(bool complex) {
  if (complex && uniform(0, 1) == 1) return Scalar(rational(), rational());
  return Scalar(rational());
}

Poly Sampler::poly(int max_degree, bool complex) {
  const int deg = uniform(0, max_degree);
  std::vector<Scalar> c;
  for (int k = 0; k <= deg; ++k) c.push_back(scalar(complex));
  return Poly(std::move(c));
}

BimodElement Sampler::d2_element(int max_terms, int max_degree) {
  std::vector<BimodElement::Term> terms;
  const int n = uniform(1, max_terms);
  for (int k = 0; k < n; ++k) terms.emplace_back(poly(max_degree), poly(max_degree));
  return BimodElement(GeneratorTag::D2, std::move(terms));
}

BimodElement Sampler::gauss_element(int max_degree) { return BimodElement::gauss(poly(max_degree)); }

WeylElement Sampler::weyl(int max_exponent, int max_terms) {
  WeylElement u;
  const int n = uniform(1, max_terms);
  for (int k = 0; k < n; ++k) {
    u += WeylElement::monomial(uniform(0, max_exponent), uniform(0, max_exponent), scalar());
  }
  return u;
}

MomentFunctional Sampler::atomic_measure(int max_atoms) {
  const int n = uniform(1, max_atoms);
  std::set<Rational> points;
  std::vector<Atom> atoms;
  while (static_cast<int>(atoms.size()) < n) {
    const Rational x = rational();
    if (!points.insert(x).second) continue;
    Rational w(uniform(1, 6), uniform(1, 4));
    w.canonicalize();
    atoms.push_back({x, w});
  }
  return MomentFunctional::atomic(std::move(atoms));
}

ScalarMatrix Sampler::matrix(std::size_t rows, std::size_t cols) {
  ScalarMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar();
  return m;
}

ActionTable Sampler::action_table(std::size_t dim) {
  ScalarMatrix gram;
  if (uniform(0, 1) == 0) {
    gram = ScalarMatrix(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) gram(k, k) = Scalar(Rational(uniform(1, 5), uniform(1, 3)));
  } else {
    // B^H B + I is positive definite.
    const ScalarMatrix b = matrix(dim, dim);
    gram = adjoint(b) * b + ScalarMatrix::identity(dim);
  }
  ScalarMatrix s = matrix(dim, dim);
  s = Scalar(Rational(1, 2)) * (s + adjoint(s));
  return ActionTable(inverse(gram) * s, gram);
}

}  // namespace starbimod
