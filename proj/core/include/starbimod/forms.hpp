// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "starbimod/matrix.hpp"
#include "starbimod/poly.hpp"

namespace starbimod {

/// How C[q] acts on a finite-dimensional domain D, together with the inner
/// product of D.
///
/// `generator` is the matrix R of q, `gram` the matrix G with
/// <u, v> = v^H G u. The constructor checks G = G^H and G R = R^H G, i.e. q
/// acts as a hermitian operator. G may be singular.
class ActionTable {
 public:
  ActionTable(ScalarMatrix generator, ScalarMatrix gram);

  static ActionTable with_identity_gram(ScalarMatrix generator);

  std::size_t dim() const { return generator_.rows(); }
  const ScalarMatrix& generator() const { return generator_; }
  const ScalarMatrix& gram() const { return gram_; }

  /// a evaluated at the generator matrix.
  ScalarMatrix represent(const Poly& a) const;

 private:
  ScalarMatrix generator_;
  ScalarMatrix gram_;
};

/// Sesquilinear form x(phi, psi) = psi^H M phi on D.
struct FormMatrix {
  ScalarMatrix m;
  std::size_t dim() const { return m.rows(); }
  friend bool operator==(const FormMatrix&, const FormMatrix&) = default;
};

/// a * x * b with (a.x)(phi,psi) = x(phi, a^+ psi) and (x.b)(phi,psi) = x(b phi, psi):
/// M -> R(a^+)^H M R(b).
FormMatrix form_action(const Poly& a, const FormMatrix& x, const Poly& b, const ActionTable& act);

/// x^+(phi,psi) = conj(x(psi,phi)): M -> M^H.
FormMatrix form_involution(const FormMatrix& x);

/// x_t(phi,psi) = <t phi, psi>: M = G t.
FormMatrix form_from_operator(const ScalarMatrix& t, const ActionTable& act);

/// G^{-1} t^H G, the adjoint of t for the G-inner product. G must be invertible.
ScalarMatrix operator_adjoint(const ScalarMatrix& t, const ActionTable& act);

/// Whether x_T . q = q . x_T, i.e. T lies in the weak commutant of the action.
bool weak_commutant_test(const ScalarMatrix& t, const ActionTable& act);

}  // namespace starbimod
