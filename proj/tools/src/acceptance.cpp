// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include "starbimod/cli/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>

#include "starbimod/cli/io.hpp"
#include "starbimod/cli/parser.hpp"
#include "starbimod/error.hpp"
#include "starbimod/forms.hpp"
#include "starbimod/gns.hpp"
#include "starbimod/probe.hpp"
#include "starbimod/sampling.hpp"

namespace starbimod::cli {

MomentFunctional mu3() { return MomentFunctional::atomic({{-1, 1}, {0, 1}, {1, 1}}); }
MomentFunctional atoms012() { return MomentFunctional::atomic({{0, 1}, {1, 1}, {2, 1}}); }

MomentFunctional harmonic_atoms(int count) {
  std::vector<Atom> atoms;
  Rational w(1);
  for (int n = 1; n <= count; ++n) {
    w /= 2;
    atoms.push_back({Rational(1, n), w});
  }
  return MomentFunctional::atomic(std::move(atoms));
}

namespace {

using B = BimodElement;
using Spec = FunctionalSpec;
using Clock = std::chrono::steady_clock;

const Poly kQ = Poly::q();

std::vector<MomentFunctional> gns_measures() {
  return {mu3(), atoms012(), MomentFunctional::lebesgue_unit_interval(kMomentCount),
          MomentFunctional::gaussian(kMomentCount)};
}

struct Tally {
  int passed = 0;
  int total = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++total;
    if (ok) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = what;
    }
  }
  bool all() const { return passed == total; }
  std::string summary() const {
    std::string s = std::to_string(passed) + "/" + std::to_string(total);
    if (!first_failure.empty()) s += "; first failure: " + first_failure;
    return s;
  }
};

CriterionResult gns_identity(std::uint64_t seed) {
  const auto start = Clock::now();
  Sampler s(seed);
  const auto measures = gns_measures();
  const std::vector<Spec> specs{Spec::f0(), Spec::f1(), Spec::f2()};
  Tally t;
  for (int k = 0; k < 1000; ++k) {
    const Spec& spec = specs[static_cast<std::size_t>(s.uniform(0, 2))];
    const auto& mf = measures[static_cast<std::size_t>(s.uniform(0, 3))];
    const Poly a = s.poly(6), b = s.poly(6);
    const B x = s.d2_element(4, 4);
    const auto r = verify_gns_identity(spec, a, x, b, mf);
    t.record(r.equal, to_string(spec) + " lhs=" + to_string(r.lhs) + " rhs=" + to_string(r.rhs));
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = secs < kGnsTimeBudgetSeconds;
  return {1, "", t.all() && in_time,
          t.summary() + " exact" + (in_time ? "" : ", over the time budget"), secs};
}

CriterionResult gauss_gns_identity(std::uint64_t seed) {
  Sampler s(seed);
  const auto measures = gns_measures();
  const std::vector<Poly> weights{1, kQ, kQ * kQ - 1};
  Tally poly_cases;
  for (int k = 0; k < 500; ++k) {
    const Spec spec = Spec::gauss_poly(weights[static_cast<std::size_t>(k % 3)]);
    const auto& mf = measures[static_cast<std::size_t>(s.uniform(0, 3))];
    const auto r = verify_gns_identity(spec, s.poly(6), s.gauss_element(6), s.poly(6), mf);
    poly_cases.record(r.equal, "w=" + to_string(spec.weight));
  }
  Tally atom_cases;
  for (int k = 0; k < 100; ++k) {
    const Spec spec = Spec::gauss_atoms({s.rational(), s.rational(), s.rational()});
    const auto r = verify_gns_identity(spec, s.poly(6), s.gauss_element(6), s.poly(6), mu3());
    atom_cases.record(r.equal, "atom weights");
  }
  return {2, "", poly_cases.all() && atom_cases.all(),
          "gauss-poly " + poly_cases.summary() + ", gauss-atoms " + atom_cases.summary(), 0};
}

CriterionResult paper_values(std::uint64_t) {
  Tally t;
  const B dd = B::d2();
  const B p = Scalar(Rational(0), Rational(-1, 2)) * (B::d2(1, kQ) - B::d2(kQ, 1));
  const auto half = theta2_schrodinger(p, 10);
  for (int k = 0; k <= 10; ++k) {
    const Poly m = Poly::monomial(k);
    const std::string at = " at q^" + std::to_string(k);
    t.record(theta_F(Spec::f0(), dd, m) == m, "theta_F0(d^2)" + at);
    t.record(theta_F(Spec::f1(), dd, m) == derive(m, 1), "theta_F1(d^2)" + at);
    t.record(theta_F(Spec::f2(), dd, m) == derive(m, 2), "theta_F2(d^2)" + at);
    t.record(half[static_cast<std::size_t>(k)] == Poly::monomial(k, Scalar(Rational(1, 2))), "theta_2(p)" + at);
  }
  t.record(equal(from_weyl(parse_expression("p")), p), "p as an element of X_2");
  return {3, "", t.all(), t.summary() + " monomial checks", 0};
}

CriterionResult vartheta_not_injective(std::uint64_t) {
  const B x0(GeneratorTag::D2, {{kQ * kQ, 1}, {-2 * kQ, kQ}, {1, kQ * kQ}});
  const bool nonzero = !equal(x0, B::zero(GeneratorTag::D2));
  const bool killed = vartheta(x0).is_zero();
  const bool parsed = equal(from_weyl(parse_expression("q^2*d^2 - 2*q*d^2*q + d^2*q^2")), x0);
  std::string detail = "x0 = " + to_string(to_weyl(x0)) + (nonzero ? " (nonzero)" : " (ZERO)") +
                       ", vartheta(x0) = " + to_string(vartheta(x0));
  return {4, "", nonzero && killed && parsed, detail, 0};
}

CriterionResult normal_ordering(std::uint64_t seed) {
  Sampler s(seed);
  Tally t;
  for (int k = 0; k < 500; ++k) {
    const WeylElement u = s.weyl(6, 3), v = s.weyl(6, 3);
    const WeylElement uv = u * v;
    bool ok = true;
    for (int n = 0; n <= 12 && ok; ++n) {
      const Poly m = Poly::monomial(n);
      ok = apply(uv, m) == apply(u, apply(v, m));
    }
    t.record(ok, "(" + to_string(u) + ") * (" + to_string(v) + ")");
  }
  return {5, "", t.all(), t.summary() + " products agree with the operator action on q^0..q^12", 0};
}

CriterionResult cauchy_schwarz(std::uint64_t seed) {
  Sampler s(seed);
  const auto measures = gns_measures();
  const std::vector<Spec> specs{Spec::f0(), Spec::f1(), Spec::f2()};
  Tally holds;
  Tally equality;
  for (int k = 0; k < 1000; ++k) {
    const auto& mf = measures[static_cast<std::size_t>(s.uniform(0, 3))];
    if (k % 4 == 3) {
      const Spec spec = Spec::gauss_poly(std::vector<Poly>{1, kQ, kQ * kQ - 1}[static_cast<std::size_t>(k % 3)]);
      const B x = s.gauss_element(4);
      holds.record(cauchy_schwarz_check(spec, s.poly(5), x, mf).holds, "gauss-poly");
      equality.record(cauchy_schwarz_check(spec, representing_poly(spec, x), x, mf).equality, "gauss-poly a=h");
      continue;
    }
    const Spec& spec = specs[static_cast<std::size_t>(k % 3)];
    const B x = s.d2_element(4, 4);
    const auto r = cauchy_schwarz_check(spec, s.poly(5), x, mf);
    holds.record(r.holds, to_string(spec) + " |F|^2=" + to_string(r.lhs_sq) + " bound=" + to_string(r.bound));
    equality.record(cauchy_schwarz_check(spec, representing_poly(spec, x), x, mf).equality, to_string(spec) + " a=h");
  }
  return {6, "", holds.all() && equality.all(),
          "inequality " + holds.summary() + ", equality at a=h " + equality.summary(), 0};
}

CriterionResult lemma_bound(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> dim(1, 8);
  Tally t;
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int n = dim(rng);
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = {u(rng), u(rng)};
    const auto r = operator_norm_lemma_check(m, rng(), kLemmaSamples);
    if (r.numerical_radius > 0) worst = std::max(worst, r.norm / r.numerical_radius);
    t.record(r.holds, "norm " + format_double(r.norm) + " > 4 * " + format_double(r.numerical_radius));
  }
  return {7, "", t.all(), t.summary() + ", max ||T||/M = " + format_double(worst), 0};
}

CriterionResult axiom_suites(std::uint64_t seed) {
  Sampler s(seed);
  Tally bimod;
  for (int k = 0; k < 1000; ++k) {
    const Poly a = s.poly(3), b = s.poly(3);
    const B x = k % 5 == 4 ? s.gauss_element(4) : s.d2_element(3, 3);
    const bool assoc = equal(action(a, action(1, x, b), 1), action(1, action(a, x, 1), b)) &&
                       equal(action(a * b, x, 1), action(a, action(b, x, 1), 1)) &&
                       equal(action(1, x, a * b), action(1, action(1, x, a), b));
    const bool star = equal(involution(action(a, x, b)), action(involution(b), involution(x), involution(a)));
    const bool left = equal(action(a, x, 1), involution(action(1, involution(x), involution(a))));
    bimod.record(assoc && star && left, "bimodule case " + std::to_string(k));
  }
  Tally forms;
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = static_cast<std::size_t>(s.uniform(1, 4));
    const ActionTable act = s.action_table(n);
    const FormMatrix x{s.matrix(n, n)};
    const Poly a = s.poly(3), b = s.poly(3);
    const bool assoc = form_action(b, form_action(a, x, 1, act), 1, act) == form_action(b * a, x, 1, act) &&
                       form_action(1, form_action(a, x, 1, act), b, act) ==
                           form_action(a, form_action(1, x, b, act), 1, act);
    const bool star = form_involution(form_action(a, x, b, act)) ==
                      form_action(involution(b), form_involution(x), involution(a), act);
    const bool left =
        form_action(a, x, 1, act) == form_involution(form_action(1, form_involution(x), involution(a), act));
    forms.record(assoc && star && left, "forms case " + std::to_string(k));
  }
  return {8, "", bimod.all() && forms.all(), "bimodule " + bimod.summary() + ", forms " + forms.summary(), 0};
}

struct ProbeConfig {
  std::string label;
  MomentFunctional mf;
  Spec spec;
  Verdict theta_expected;
  Verdict rho_expected;
};

std::string lambda_tail(const ProbeReport& r) {
  std::string s;
  for (std::size_t k = r.lambda.size() >= 3 ? r.lambda.size() - 3 : 0; k < r.lambda.size(); ++k) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5g", r.lambda[k]);
    s += (s.empty() ? "" : ",") + std::string(buf);
  }
  return s;
}

CriterionResult four_case_probe(std::uint64_t) {
  std::vector<Rational> atom_values;
  for (int n = 1; n <= kAtomFamilySize; ++n) atom_values.emplace_back(n);
  const std::vector<ProbeConfig> configs{
      {"lebesgue w=1", MomentFunctional::lebesgue_unit_interval(kMomentCount), Spec::gauss_poly(1), Verdict::Bounded,
       Verdict::Bounded},
      {"gaussian w=1", MomentFunctional::gaussian(kMomentCount), Spec::gauss_poly(1), Verdict::Bounded,
       Verdict::GrowthDetected},
      {"atoms 1/n w=n", harmonic_atoms(kAtomFamilySize), Spec::gauss_atoms(atom_values), Verdict::GrowthDetected,
       Verdict::Bounded},
      {"gaussian w=q", MomentFunctional::gaussian(kMomentCount), Spec::gauss_poly(kQ), Verdict::GrowthDetected,
       Verdict::GrowthDetected},
  };
  std::vector<int> degrees;
  for (int n = 2; n <= 10; ++n) degrees.push_back(n);

  bool all = true;
  std::string detail;
  for (const auto& c : configs) {
    const ProbeReport theta = boundedness_probe(c.spec, B::gauss(1), c.mf, degrees);
    const ProbeReport rho = multiplication_probe(c.mf, degrees);
    const Verdict tv = classify(theta.lambda, kProbeSpreadTolerance);
    const Verdict rv = classify(rho.lambda, kProbeSpreadTolerance);
    const bool ok = tv == c.theta_expected && rv == c.rho_expected;
    all = all && ok;
    detail += (detail.empty() ? "" : "; ") + c.label + ": (" + to_string(tv) + "," + to_string(rv) + ")";
    if (!ok) {
      detail += " expected (" + to_string(c.theta_expected) + "," + to_string(c.rho_expected) + "), lambda tails [" +
                lambda_tail(theta) + "] [" + lambda_tail(rho) + "]";
    }
  }
  return {9, "", all, detail, 0};
}

CriterionResult uniqueness(std::uint64_t seed) {
  Sampler s(seed);
  Tally t;
  auto check = [&](const MomentFunctional& a, const MomentFunctional& b, const std::string& what) {
    for (int n = 0; n <= 8; ++n) t.record(verify_uniqueness_intertwiner(a, b, n).verified(), what + " N=" + std::to_string(n));
  };
  check(mu3(), MomentFunctional::atomic({{1, 1}, {0, 1}, {-1, 1}}), "mu3 permuted");
  std::vector<Scalar> point(17, Scalar(0));
  point[0] = 2;
  check(MomentFunctional::atomic({{0, 2}}), MomentFunctional::from_moments(point), "point mass");
  for (int k = 0; k < 10; ++k) {
    const MomentFunctional a = s.atomic_measure(6);
    auto atoms = a.atoms();
    std::reverse(atoms.begin(), atoms.end());
    check(a, MomentFunctional::atomic(atoms), "random permuted");
    check(MomentFunctional::from_moments(a.moments(17)), a, "moments vs atoms");
  }
  bool mismatch = false;
  try {
    verify_uniqueness_intertwiner(mu3(), atoms012(), 2);
  } catch (const Error& e) {
    mismatch = e.kind() == ErrorKind::MomentMismatch;
  }
  t.record(mismatch, "mu3 vs atoms{0,1,2} not rejected");
  return {10, "", t.all(), t.summary() + " intertwiners verified", 0};
}

CriterionResult psd_gate(std::uint64_t seed) {
  Tally t;
  for (const auto& m : {std::vector<Scalar>{1, 0, -1}, std::vector<Scalar>{0, 1, 0}}) {
    bool rejected = false;
    try {
      build_gns(MomentFunctional::from_moments(m), 1);
    } catch (const Error& e) {
      rejected = e.kind() == ErrorKind::NotPositive;
    }
    t.record(rejected, "moments {" + to_string(m[0]) + "," + to_string(m[1]) + "," + to_string(m[2]) + "} accepted");
  }
  Sampler s(seed);
  std::vector<MomentFunctional> atomic{mu3(), atoms012(), harmonic_atoms(kAtomFamilySize)};
  for (int k = 0; k < 200; ++k) atomic.push_back(s.atomic_measure(8));
  for (const auto& mf : atomic) {
    for (int n : {0, 3, 8}) {
      bool ok = true;
      try {
        build_gns(mf, n);
      } catch (const Error&) {
        ok = false;
      }
      t.record(ok, "atomic measure rejected");
    }
  }
  return {11, "", t.all(), t.summary() + " gate decisions", 0};
}

CriterionResult parser(std::uint64_t seed) {
  Tally t;
  Sampler s(seed);
  for (int k = 0; k < 500; ++k) {
    const WeylElement u = s.weyl(6, 4);
    const std::string text = to_string(u);
    bool ok = false;
    try {
      ok = parse_expression(text) == u;
    } catch (const Error&) {
    }
    t.record(ok, "round trip of " + text);
  }
  const WeylElement q = WeylElement::q(), d = WeylElement::d();
  t.record(parse_expression("d*q") == q * d + WeylElement(1), "d*q");
  const WeylElement x0 = parse_expression("q^2*d^2 - 2*q*d^2*q + d^2*q^2");
  t.record(x0 == WeylElement(2), "x0 normal form " + to_string(x0));
  t.record(parse_expression("p*q - q*p") == WeylElement(-Scalar::i()), "p*q - q*p");
  return {12, "", t.all(), t.summary() + " (500 round trips + 3 pinned forms)", 0};
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> kCriteria{
      {1, "gns-identity", gns_identity},
      {2, "gauss-gns-identity", gauss_gns_identity},
      {3, "paper-values", paper_values},
      {4, "vartheta-not-injective", vartheta_not_injective},
      {5, "normal-ordering", normal_ordering},
      {6, "cauchy-schwarz", cauchy_schwarz},
      {7, "numerical-radius-bound", lemma_bound},
      {8, "bimodule-axioms", axiom_suites},
      {9, "four-case-probe", four_case_probe},
      {10, "uniqueness", uniqueness},
      {11, "psd-gate", psd_gate},
      {12, "parser", parser},
  };
  return kCriteria;
}

std::string format_result(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%s %2d %-24s", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str());
  char secs[32];
  std::snprintf(secs, sizeof secs, " (%.2f s)", r.seconds);
  return std::string(head) + " " + r.detail + secs;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::ostream& out) {
  std::vector<CriterionResult> results;
  for (const auto& c : acceptance_criteria()) {
    const auto start = Clock::now();
    CriterionResult r;
    try {
      r = c.run(seed + static_cast<std::uint64_t>(c.id));
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("threw: ") + e.what();
    }
    r.id = c.id;
    r.name = c.name;
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    out << format_result(r) << std::endl;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace starbimod::cli
