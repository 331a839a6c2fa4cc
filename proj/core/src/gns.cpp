// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include "starbimod/gns.hpp"

#include "starbimod/error.hpp"
#include "starbimod/matrix.hpp"

namespace starbimod {

std::string to_string(const FunctionalSpec& spec) {
  switch (spec.kind) {
    case FunctionalSpec::Kind::F0: return "F0";
    case FunctionalSpec::Kind::F1: return "F1";
    case FunctionalSpec::Kind::F2: return "F2";
    case FunctionalSpec::Kind::GaussPolyWeight: return "gauss-poly";
    case FunctionalSpec::Kind::GaussAtomWeight: return "gauss-atoms";
  }
  return "unknown";
}

namespace {

using Kind = FunctionalSpec::Kind;

void require_compatible(const FunctionalSpec& spec, const BimodElement& x) {
  if (x.tag() != spec.required_tag()) {
    throw Error(ErrorKind::SpecTagMismatch,
                to_string(spec) + " is not defined on " + to_string(x.tag()) + " elements");
  }
}

const std::vector<Atom>& require_atom_table(const FunctionalSpec& spec, const MomentFunctional& mf) {
  if (!mf.is_atomic()) {
    throw Error(ErrorKind::SpecTagMismatch, "gauss-atoms needs an atomic measure");
  }
  const auto& atoms = mf.atoms();
  if (atoms.size() != spec.atom_values.size()) {
    throw Error(ErrorKind::SpecTagMismatch, "gauss-atoms table has " + std::to_string(spec.atom_values.size()) +
                                                " values for " + std::to_string(atoms.size()) + " atoms");
  }
  return atoms;
}

Rational real_or_throw(const Scalar& s, const char* what) {
  if (!s.is_real()) throw Error(ErrorKind::NotPositive, std::string(what) + " is not real");
  return s.re();
}

// Weighted sum_i mu_i |v_i|^2 over the atoms of mf.
Rational atom_norm_sq(const std::vector<Atom>& atoms, const std::vector<Scalar>& values) {
  Rational sum(0);
  for (std::size_t i = 0; i < atoms.size(); ++i) sum += atoms[i].weight * values[i].norm_sq();
  return sum;
}

}  // namespace

Scalar functional_F(const FunctionalSpec& spec, const BimodElement& x, const MomentFunctional& mf) {
  require_compatible(spec, x);
  switch (spec.kind) {
    case Kind::F0: return mf.integrate(coefficient_triple(x).h0);
    case Kind::F1: return mf.integrate(coefficient_triple(x).h1);
    case Kind::F2: return mf.integrate(coefficient_triple(x).h2);
    case Kind::GaussPolyWeight: return mf.integrate(spec.weight * x.gauss_poly());
    case Kind::GaussAtomWeight: {
      const auto& atoms = require_atom_table(spec, mf);
      const Poly p = x.gauss_poly();
      Scalar sum;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        sum += Scalar(Rational(atoms[i].weight * spec.atom_values[i])) * eval(p, atoms[i].point);
      }
      return sum;
    }
  }
  throw Error(ErrorKind::UnsupportedVariant, "unknown functional");
}

Poly theta_F(const FunctionalSpec& spec, const BimodElement& x, const Poly& b) {
  require_compatible(spec, x);
  Poly out;
  switch (spec.kind) {
    case Kind::F0:
      for (const auto& [aj, bj] : x.terms()) out += aj * bj * b;
      return out;
    case Kind::F1:
      for (const auto& [aj, bj] : x.terms()) out += aj * derive(bj * b, 1);
      return out;
    case Kind::F2:
      for (const auto& [aj, bj] : x.terms()) out += aj * derive(bj * b, 2);
      return out;
    case Kind::GaussPolyWeight: return spec.weight * x.gauss_poly() * b;
    case Kind::GaussAtomWeight:
      throw Error(ErrorKind::UnsupportedVariant, "gauss-atoms operators act on atom coordinates");
  }
  throw Error(ErrorKind::UnsupportedVariant, "unknown functional");
}

std::vector<Scalar> theta_F_atoms(const FunctionalSpec& spec, const BimodElement& x, const MomentFunctional& mf,
                                  const std::vector<Scalar>& coords) {
  require_compatible(spec, x);
  if (spec.kind != Kind::GaussAtomWeight) {
    throw Error(ErrorKind::UnsupportedVariant, "atom coordinates are only used by gauss-atoms");
  }
  const auto& atoms = require_atom_table(spec, mf);
  if (coords.size() != atoms.size()) throw Error(ErrorKind::DimensionMismatch, "atom coordinate vector");
  const Poly p = x.gauss_poly();
  std::vector<Scalar> out;
  out.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    out.push_back(Scalar(spec.atom_values[i]) * eval(p, atoms[i].point) * coords[i]);
  }
  return out;
}

GnsIdentityReport verify_gns_identity(const FunctionalSpec& spec, const Poly& a, const BimodElement& x,
                                      const Poly& b, const MomentFunctional& mf) {
  GnsIdentityReport report;
  report.lhs = functional_F(spec, action(a, x, b), mf);

  const Poly a_star = involution(a);
  if (spec.kind == Kind::GaussAtomWeight) {
    const auto& atoms = require_atom_table(spec, mf);
    std::vector<Scalar> rho_b;
    for (const auto& atom : atoms) rho_b.push_back(eval(b, atom.point));
    const std::vector<Scalar> u = theta_F_atoms(spec, x, mf, rho_b);
    Scalar rhs;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      rhs += Scalar(atoms[i].weight) * u[i] * eval(a_star, atoms[i].point).conj();
    }
    report.rhs = rhs;
  } else {
    report.rhs = gns_inner(mf, theta_F(spec, x, b), a_star);
  }
  report.equal = report.lhs == report.rhs;
  return report;
}

Poly representing_poly(const FunctionalSpec& spec, const BimodElement& x) {
  require_compatible(spec, x);
  switch (spec.kind) {
    case Kind::F0: return coefficient_triple(x).h0;
    case Kind::F1: return coefficient_triple(x).h1;
    case Kind::F2: return coefficient_triple(x).h2;
    case Kind::GaussPolyWeight: return spec.weight * x.gauss_poly();
    case Kind::GaussAtomWeight:
      throw Error(ErrorKind::UnsupportedVariant, "gauss-atoms weight is not a polynomial");
  }
  throw Error(ErrorKind::UnsupportedVariant, "unknown functional");
}

CauchySchwarzReport cauchy_schwarz_check(const FunctionalSpec& spec, const Poly& a, const BimodElement& x,
                                         const MomentFunctional& mf) {
  CauchySchwarzReport report;
  const Poly a_star = involution(a);
  report.lhs_sq = functional_F(spec, action(a_star, x, Poly(1)), mf).norm_sq();

  Rational c_x;
  Rational f_aa;
  if (spec.kind == Kind::GaussAtomWeight) {
    const auto& atoms = require_atom_table(spec, mf);
    const Poly p = x.gauss_poly();
    std::vector<Scalar> h;
    std::vector<Scalar> av;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      h.push_back(Scalar(spec.atom_values[i]) * eval(p, atoms[i].point));
      av.push_back(eval(a, atoms[i].point));
    }
    c_x = atom_norm_sq(atoms, h);
    f_aa = atom_norm_sq(atoms, av);
  } else {
    const Poly h = representing_poly(spec, x);
    c_x = real_or_throw(mf.integrate(involution(h) * h), "f(h^+ h)");
    f_aa = real_or_throw(mf.integrate(a_star * a), "f(a^+ a)");
  }
  report.bound = c_x * f_aa;
  report.holds = report.lhs_sq <= report.bound;
  report.equality = report.lhs_sq == report.bound;
  return report;
}

namespace {

// Coordinates of the second presentation: vectors v with <u, v> = v^H W u,
// the matrix of rho(q), the cyclic vector psi, and the image U of the
// monomials q^0..q^N.
struct Presentation {
  ScalarMatrix inner;
  ScalarMatrix q_action;
  ScalarMatrix cyclic;
  ScalarMatrix embed;
};

Presentation atom_presentation(const std::vector<Atom>& atoms, int max_degree) {
  const std::size_t k = atoms.size();
  const std::size_t n = static_cast<std::size_t>(max_degree) + 1;
  Presentation p{ScalarMatrix(k, k), ScalarMatrix(k, k), ScalarMatrix(k, 1), ScalarMatrix(k, n)};
  for (std::size_t i = 0; i < k; ++i) {
    p.inner(i, i) = Scalar(atoms[i].weight);
    p.q_action(i, i) = Scalar(atoms[i].point);
    p.cyclic(i, 0) = Scalar(1);
    Rational power(1);
    for (std::size_t j = 0; j < n; ++j) {
      p.embed(i, j) = Scalar(power);
      power *= atoms[i].point;
    }
  }
  return p;
}

Presentation monomial_presentation(const MomentFunctional& mf, int max_degree) {
  const std::size_t n = static_cast<std::size_t>(max_degree) + 1;
  Presentation p{to_scalar_matrix(build_gns(mf, max_degree).gram()), ScalarMatrix(n, n), ScalarMatrix(n, 1),
                 ScalarMatrix::identity(n)};
  for (std::size_t j = 0; j + 1 < n; ++j) p.q_action(j + 1, j) = Scalar(1);
  p.cyclic(0, 0) = Scalar(1);
  return p;
}

ScalarMatrix column(const ScalarMatrix& m, std::size_t c) {
  ScalarMatrix r(m.rows(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) r(i, 0) = m(i, c);
  return r;
}

}  // namespace

UniquenessReport verify_uniqueness_intertwiner(const MomentFunctional& mf1, const MomentFunctional& mf2,
                                               int max_degree) {
  if (max_degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree bound");
  for (int k = 0; k <= 2 * max_degree; ++k) {
    if (mf1.moment(k) != mf2.moment(k)) {
      throw Error(ErrorKind::MomentMismatch, "moment " + std::to_string(k) + " differs: " +
                                                 to_string(mf1.moment(k)) + " vs " + to_string(mf2.moment(k)));
    }
  }

  const GnsRealization first = build_gns(mf1, max_degree);
  const ScalarMatrix g1 = to_scalar_matrix(first.gram());
  const Presentation second =
      mf2.is_atomic() ? atom_presentation(mf2.atoms(), max_degree) : monomial_presentation(mf2, max_degree);
  const ScalarMatrix& u = second.embed;

  UniquenessReport report;
  report.max_degree = max_degree;
  report.second_is_atomic = mf2.is_atomic();
  report.isometry = adjoint(u) * second.inner * u == g1;
  report.cyclic = column(u, 0) == second.cyclic;

  // rho_f(q) q^k = q^(k+1) must map to rho(q) U q^k.
  bool intertwines = true;
  for (int k = 0; k < max_degree && intertwines; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    intertwines = second.q_action * column(u, kk) == column(u, kk + 1);
  }
  report.intertwines = intertwines;

  bool kernel_ok = true;
  for (const Poly& v : first.kernel_basis()) {
    ScalarMatrix vec(u.cols(), 1);
    for (std::size_t j = 0; j < u.cols(); ++j) vec(j, 0) = v.coeff(static_cast<int>(j));
    const ScalarMatrix image = u * vec;
    if (!(adjoint(image) * second.inner * image)(0, 0).is_zero()) kernel_ok = false;
  }
  report.kernel_to_null = kernel_ok;
  return report;
}

}  // namespace starbimod
