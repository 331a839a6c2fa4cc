// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include "starbimod/moments.hpp"

#include <string>

#include "starbimod/error.hpp"

namespace starbimod {

MomentFunctional MomentFunctional::atomic(std::vector<Atom> atoms) {
  for (auto& a : atoms) {
    a.point.canonicalize();
    a.weight.canonicalize();
    if (sgn(a.weight) < 0) throw Error(ErrorKind::InvalidArgument, "negative atom weight");
  }
  return MomentFunctional(std::move(atoms));
}

MomentFunctional MomentFunctional::from_moments(std::vector<Scalar> moments) {
  return MomentFunctional(std::move(moments));
}

MomentFunctional MomentFunctional::gaussian(std::size_t count) {
  std::vector<Scalar> m(count);
  mpz_class even(1);  // (2n-1)!!
  for (std::size_t k = 0; k < count; ++k) {
    if (k % 2 == 1) continue;
    if (k > 0) even *= static_cast<unsigned long>(k - 1);
    m[k] = Scalar(Rational(even));
  }
  return from_moments(std::move(m));
}

MomentFunctional MomentFunctional::lebesgue_unit_interval(std::size_t count) {
  std::vector<Scalar> m;
  m.reserve(count);
  for (std::size_t k = 0; k < count; ++k) m.emplace_back(Rational(1, static_cast<long>(k + 1)));
  return from_moments(std::move(m));
}

const std::vector<Atom>& MomentFunctional::atoms() const {
  if (!is_atomic()) throw Error(ErrorKind::InvalidArgument, "functional is not atomic");
  return std::get<std::vector<Atom>>(source_);
}

std::optional<std::size_t> MomentFunctional::moment_count() const {
  if (is_atomic()) return std::nullopt;
  return std::get<std::vector<Scalar>>(source_).size();
}

Scalar MomentFunctional::moment(int k) const {
  if (k < 0) throw Error(ErrorKind::MomentOutOfRange, "negative moment index");
  if (const auto* atoms = std::get_if<std::vector<Atom>>(&source_)) {
    Rational sum(0);
    for (const auto& a : *atoms) {
      Rational p(1);
      for (int j = 0; j < k; ++j) p *= a.point;
      sum += a.weight * p;
    }
    return Scalar(sum);
  }
  const auto& m = std::get<std::vector<Scalar>>(source_);
  if (static_cast<std::size_t>(k) >= m.size()) {
    throw Error(ErrorKind::MomentOutOfRange,
                "moment " + std::to_string(k) + " requested, " + std::to_string(m.size()) + " available");
  }
  return m[static_cast<std::size_t>(k)];
}

std::vector<Scalar> MomentFunctional::moments(std::size_t count) const {
  if (const auto* atoms = std::get_if<std::vector<Atom>>(&source_)) {
    std::vector<Scalar> out(count);
    for (const auto& a : *atoms) {
      Rational p(a.weight);
      for (std::size_t k = 0; k < count; ++k) {
        out[k] += Scalar(p);
        p *= a.point;
      }
    }
    return out;
  }
  std::vector<Scalar> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(moment(static_cast<int>(k)));
  return out;
}

Scalar MomentFunctional::integrate(const Poly& p) const {
  if (p.is_zero()) return Scalar();
  const std::vector<Scalar> m = moments(static_cast<std::size_t>(p.degree()) + 1);
  Scalar sum;
  for (int k = 0; k <= p.degree(); ++k) sum += p.coeff(k) * m[static_cast<std::size_t>(k)];
  return sum;
}

Scalar gns_inner(const MomentFunctional& mf, const Poly& u, const Poly& v) {
  if (u.is_zero() || v.is_zero()) return Scalar();
  const std::vector<Scalar> m = mf.moments(static_cast<std::size_t>(u.degree() + v.degree()) + 1);
  Scalar sum;
  for (int j = 0; j <= u.degree(); ++j) {
    if (u.coeff(j).is_zero()) continue;
    for (int k = 0; k <= v.degree(); ++k) {
      sum += u.coeff(j) * v.coeff(k).conj() * m[static_cast<std::size_t>(j + k)];
    }
  }
  return sum;
}

PivotedLdl pivoted_ldl(const RationalMatrix& g) {
  if (!g.is_square()) throw Error(ErrorKind::DimensionMismatch, "gram matrix is not square");
  const std::size_t n = g.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (g(i, j) != g(j, i)) throw Error(ErrorKind::NotPositive, "gram matrix is not symmetric");

  RationalMatrix s = g;
  std::vector<bool> used(n, false);
  std::vector<std::vector<Rational>> columns;
  PivotedLdl out;

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      if (sgn(s(i, i)) < 0) {
        throw Error(ErrorKind::NotPositive, "negative pivot at index " + std::to_string(i));
      }
      if (best == n || s(i, i) > s(best, best)) best = i;
    }
    if (best == n) break;
    if (sgn(s(best, best)) == 0) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!used[i] && !used[j] && sgn(s(i, j)) != 0) {
            throw Error(ErrorKind::NotPositive,
                        "zero diagonal with nonzero off-diagonal at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
          }
      break;
    }

    const Rational d = s(best, best);
    used[best] = true;
    std::vector<Rational> col(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i]) col[i] = s(i, best) / d;
    }
    col[best] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i] || sgn(s(i, best)) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!used[j]) s(i, j) -= col[i] * s(best, j);
      }
    }
    out.pivots.push_back(best);
    out.diag.push_back(d);
    columns.push_back(std::move(col));
  }

  const std::size_t r = out.pivots.size();
  out.lower = RationalMatrix(r, r);
  for (std::size_t row = 0; row < r; ++row) {
    for (std::size_t c = 0; c < row; ++c) out.lower(row, c) = columns[c][out.pivots[row]];
    out.lower(row, row) = 1;
  }
  return out;
}

std::vector<std::vector<Rational>> null_space(const RationalMatrix& g) {
  RationalMatrix a = g;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix hankel_gram(const MomentFunctional& mf, int max_degree) {
  if (max_degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree bound");
  const std::size_t n = static_cast<std::size_t>(max_degree) + 1;
  if (const auto count = mf.moment_count(); count && *count < 2 * n - 1) {
    throw Error(ErrorKind::MomentOutOfRange, "degree " + std::to_string(max_degree) + " needs " +
                                                 std::to_string(2 * n - 1) + " moments, have " +
                                                 std::to_string(*count));
  }
  const std::vector<Scalar> m = mf.moments(2 * n - 1);
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (!m[k].is_real()) {
      throw Error(ErrorKind::NotPositive, "moment " + std::to_string(k) + " is not real");
    }
  }
  RationalMatrix g(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) g(j, k) = m[j + k].re();
  return g;
}

GnsRealization build_gns(const MomentFunctional& mf, int max_degree) {
  RationalMatrix gram = hankel_gram(mf, max_degree);
  PivotedLdl ldl = pivoted_ldl(gram);
  std::vector<Poly> kernel;
  for (const auto& v : null_space(gram)) {
    std::vector<Scalar> c;
    c.reserve(v.size());
    for (const auto& x : v) c.emplace_back(x);
    kernel.emplace_back(std::move(c));
  }
  return GnsRealization(mf, max_degree, std::move(gram), std::move(ldl), std::move(kernel));
}

}  // namespace starbimod
