// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include "starbimod/forms.hpp"

#include <utility>

#include "starbimod/error.hpp"

namespace starbimod {

ScalarMatrix adjoint(const ScalarMatrix& m) {
  ScalarMatrix r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j).conj();
  return r;
}

bool is_hermitian(const ScalarMatrix& m) { return m.is_square() && adjoint(m) == m; }

ScalarMatrix inverse(const ScalarMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ScalarMatrix a = m;
  ScalarMatrix inv = ScalarMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorKind::InvalidArgument, "matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Scalar scale = Scalar(1) / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Scalar f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

ScalarMatrix to_scalar_matrix(const RationalMatrix& m) {
  ScalarMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Scalar(m(i, j));
  return r;
}

ActionTable::ActionTable(ScalarMatrix generator, ScalarMatrix gram)
    : generator_(std::move(generator)), gram_(std::move(gram)) {
  if (!generator_.is_square() || !gram_.is_square() || generator_.rows() != gram_.rows() ||
      generator_.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "action table needs square matrices of one positive size");
  }
  if (!is_hermitian(gram_)) throw Error(ErrorKind::InvalidArgument, "gram matrix is not hermitian");
  if (gram_ * generator_ != adjoint(generator_) * gram_) {
    throw Error(ErrorKind::InvalidArgument, "generator is not hermitian for the gram inner product");
  }
}

ActionTable ActionTable::with_identity_gram(ScalarMatrix generator) {
  const std::size_t n = generator.rows();
  return ActionTable(std::move(generator), ScalarMatrix::identity(n));
}

ScalarMatrix ActionTable::represent(const Poly& a) const {
  // Horner in the generator matrix.
  const std::size_t n = dim();
  ScalarMatrix acc(n, n);
  for (int k = a.degree(); k >= 0; --k) {
    acc = acc * generator_;
    const Scalar c = a.coeff(k);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c;
  }
  return acc;
}

namespace {

void require_dim(std::size_t got, const ActionTable& act) {
  if (got != act.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "dimension " + std::to_string(got) + " vs action table " + std::to_string(act.dim()));
  }
}

}  // namespace

FormMatrix form_action(const Poly& a, const FormMatrix& x, const Poly& b, const ActionTable& act) {
  require_dim(x.dim(), act);
  return {adjoint(act.represent(involution(a))) * x.m * act.represent(b)};
}

FormMatrix form_involution(const FormMatrix& x) { return {adjoint(x.m)}; }

FormMatrix form_from_operator(const ScalarMatrix& t, const ActionTable& act) {
  require_dim(t.rows(), act);
  require_dim(t.cols(), act);
  return {act.gram() * t};
}

ScalarMatrix operator_adjoint(const ScalarMatrix& t, const ActionTable& act) {
  require_dim(t.rows(), act);
  return inverse(act.gram()) * adjoint(t) * act.gram();
}

bool weak_commutant_test(const ScalarMatrix& t, const ActionTable& act) {
  const FormMatrix xt = form_from_operator(t, act);
  const Poly q = Poly::q();
  return form_action(Poly(1), xt, q, act) == form_action(q, xt, Poly(1), act);
}

}  // namespace starbimod
