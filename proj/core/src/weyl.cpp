// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include "starbimod/weyl.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

#include "starbimod/error.hpp"

namespace starbimod {

namespace {

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// k (k-1) ... (k-j+1)
mpz_class falling(int k, int j) {
  mpz_class r(1);
  for (int t = 0; t < j; ++t) r *= (k - t);
  return r;
}

}  // namespace

WeylElement::WeylElement(Scalar c) { add_term(0, 0, c); }

WeylElement WeylElement::monomial(int q_exp, int d_exp, Scalar c) {
  if (q_exp < 0 || d_exp < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  WeylElement w;
  w.add_term(q_exp, d_exp, c);
  return w;
}

WeylElement WeylElement::from_poly(const Poly& a) {
  WeylElement w;
  for (int k = 0; k <= a.degree(); ++k) w.add_term(k, 0, a.coeff(k));
  return w;
}

Scalar WeylElement::coeff(int q_exp, int d_exp) const {
  const auto it = terms_.find({q_exp, d_exp});
  return it == terms_.end() ? Scalar() : it->second;
}

int WeylElement::d_degree() const {
  int n = -1;
  for (const auto& [e, c] : terms_) n = std::max(n, e.second);
  return n;
}

int WeylElement::q_degree() const {
  int m = -1;
  for (const auto& [e, c] : terms_) m = std::max(m, e.first);
  return m;
}

Poly WeylElement::d_coefficient(int d_exp) const {
  std::vector<Scalar> v;
  for (const auto& [e, c] : terms_) {
    if (e.second != d_exp) continue;
    if (static_cast<std::size_t>(e.first) >= v.size()) v.resize(static_cast<std::size_t>(e.first) + 1);
    v[static_cast<std::size_t>(e.first)] = c;
  }
  return Poly(std::move(v));
}

void WeylElement::add_term(int q_exp, int d_exp, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({q_exp, d_exp}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

WeylElement WeylElement::operator-() const {
  WeylElement r = *this;
  for (auto& [e, x] : r.terms_) x = -x;
  return r;
}

WeylElement operator*(const WeylElement& u, const WeylElement& v) {
  WeylElement out;
  for (const auto& [eu, cu] : u.terms()) {
    const auto [a, b] = eu;
    for (const auto& [ev, cv] : v.terms()) {
      const auto [k, l] = ev;
      const Scalar c = cu * cv;
      // d^b q^k = sum_j C(b,j) k!/(k-j)! q^(k-j) d^(b-j)
      for (int j = 0; j <= std::min(b, k); ++j) {
        const mpz_class mult = binomial(b, j) * falling(k, j);
        out += WeylElement::monomial(a + k - j, b - j + l, c * Scalar(Rational(mult)));
      }
    }
  }
  return out;
}

WeylElement involution(const WeylElement& u) {
  WeylElement out;
  for (const auto& [e, c] : u.terms()) {
    const auto [m, n] = e;
    // (c q^m d^n)^+ = conj(c) (-d)^n q^m
    const Scalar sign = (n % 2 == 0) ? Scalar(1) : Scalar(-1);
    out += WeylElement::monomial(0, n, c.conj() * sign) * WeylElement::monomial(m, 0);
  }
  return out;
}

Poly apply(const WeylElement& u, const Poly& p) {
  Poly out;
  for (const auto& [e, c] : u.terms()) {
    const auto [m, n] = e;
    out += Poly::monomial(m, c) * derive(p, n);
  }
  return out;
}

namespace {

std::string monomial_text(int m, int n) {
  std::string s;
  auto append = [&s](const char* sym, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += sym;
    if (e > 1) s += "^" + std::to_string(e);
  };
  append("q", m);
  append("d", n);
  return s;
}

}  // namespace

std::string to_string(const WeylElement& u) {
  if (u.is_zero()) return "0";
  std::vector<std::pair<WeylElement::Exponents, Scalar>> ordered(u.terms().begin(), u.terms().end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    if (x.first.second != y.first.second) return x.first.second > y.first.second;
    return x.first.first > y.first.first;
  });

  std::string out;
  for (const auto& [e, c] : ordered) {
    const std::string mono = monomial_text(e.first, e.second);
    bool negative = false;
    std::string factor;
    if (!c.is_real() && sgn(c.re()) != 0) {
      const Rational mag = abs(c.im());
      factor = "(" + to_string(c.re()) + (sgn(c.im()) < 0 ? " - " : " + ") +
               (mag == 1 ? std::string("i") : to_string(mag) + "*i") + ")";
    } else {
      const bool imaginary = !c.is_real();
      const Rational& part = imaginary ? c.im() : c.re();
      negative = sgn(part) < 0;
      const Rational mag = abs(part);
      if (mag != 1) factor = to_string(mag);
      if (imaginary) factor += factor.empty() ? "i" : "*i";
      if (factor.empty() && mono.empty()) factor = "1";
    }

    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += factor;
    if (!factor.empty() && !mono.empty()) out += "*";
    out += mono;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const WeylElement& u) { return os << to_string(u); }

}  // namespace starbimod
