// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include "starbimod/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "starbimod/cli/acceptance.hpp"
#include "starbimod/cli/io.hpp"
#include "starbimod/cli/parser.hpp"
#include "starbimod/error.hpp"
#include "starbimod/gns.hpp"
#include "starbimod/probe.hpp"
#include "starbimod/sampling.hpp"

namespace starbimod::cli {

namespace {

struct Options {
  std::string expression;
  std::string measure;
  std::string functional;
  std::string element;
  std::string degrees = "2..10";
  int max_degree = 6;
  int trials = 200;
  std::uint64_t seed = 42;
  int max_dim = 8;
  int samples = kLemmaSamples;
  bool multiplication = false;
  bool json = false;
  bool text = false;
};

void emit(const json& report, bool text, std::ostream& out) {
  if (!text) {
    out << report.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : report.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

json measure_input(const std::string& path) { return {{"file", path}}; }

MomentFunctional require_measure(const Options& o) {
  if (o.measure.empty()) throw Error(ErrorKind::InvalidArgument, "--measure is required");
  return measure_from_json(load_json(o.measure));
}

FunctionalSpec require_functional(const Options& o) {
  if (o.functional.empty()) throw Error(ErrorKind::InvalidArgument, "--functional is required");
  return parse_functional(o.functional);
}

BimodElement random_element(Sampler& s, const FunctionalSpec& spec, int max_degree) {
  if (spec.required_tag() == GeneratorTag::Gauss) return s.gauss_element(max_degree);
  return s.d2_element(4, std::min(4, max_degree));
}

json common_inputs(const Options& o) {
  json in = {{"measure", measure_input(o.measure)},
             {"functional", o.functional},
             {"max_degree", o.max_degree},
             {"trials", o.trials},
             {"seed", o.seed}};
  if (!o.element.empty()) in["element"] = o.element;
  return in;
}

int cmd_normal_order(const Options& o, std::ostream& out) {
  const WeylElement u = parse_expression(o.expression);
  if (o.json) {
    out << json{{"check", "normal-order"}, {"inputs", {{"expression", o.expression}}}, {"result", to_string(u)}}.dump(2)
        << "\n";
  } else {
    out << to_string(u) << "\n";
  }
  return kExitOk;
}

int cmd_theta_map(const Options& o, std::ostream& out) {
  if (o.element.empty()) throw Error(ErrorKind::InvalidArgument, "--element is required");
  if (o.max_degree < 0) throw Error(ErrorKind::InvalidArgument, "--max-degree must be nonnegative");
  const BimodElement x = parse_element(o.element, GeneratorTag::D2);
  json report = {{"check", "theta-map"},
                 {"inputs", {{"element", o.element}, {"max_degree", o.max_degree}}},
                 {"element", to_json(x)},
                 {"vartheta", to_string(vartheta(x))}};
  json table = json::array();
  for (const Poly& p : theta2_schrodinger(x, o.max_degree)) table.push_back(to_string(p));
  report["theta2"] = table;
  if (!o.functional.empty()) {
    const FunctionalSpec spec = parse_functional(o.functional);
    report["inputs"]["functional"] = o.functional;
    json tf = json::array();
    for (int k = 0; k <= o.max_degree; ++k) tf.push_back(to_string(theta_F(spec, x, Poly::monomial(k))));
    report["theta_F"] = tf;
  }
  emit(report, o.text, out);
  return kExitOk;
}

int cmd_gns_check(const Options& o, std::ostream& out) {
  const MomentFunctional mf = require_measure(o);
  const FunctionalSpec spec = require_functional(o);
  if (o.max_degree < 0 || o.trials < 1) throw Error(ErrorKind::InvalidArgument, "bad --max-degree or --trials");
  const BimodElement fixed =
      o.element.empty() ? BimodElement() : parse_element(o.element, spec.required_tag());
  Sampler s(o.seed);
  int failures = 0;
  GnsIdentityReport shown;
  bool have_failure = false;
  for (int t = 0; t < o.trials; ++t) {
    const Poly a = s.poly(o.max_degree);
    const BimodElement x = o.element.empty() ? random_element(s, spec, o.max_degree) : fixed;
    const Poly b = s.poly(o.max_degree);
    const auto r = verify_gns_identity(spec, a, x, b, mf);
    if (!r.equal) ++failures;
    if (!have_failure) shown = r;
    have_failure = have_failure || !r.equal;
  }
  const json report = {{"check", "gns-identity"}, {"inputs", common_inputs(o)}, {"lhs", to_json(shown.lhs)},
                       {"rhs", to_json(shown.rhs)}, {"equal", failures == 0}, {"passed", o.trials - failures},
                       {"failures", failures}};
  emit(report, o.text, out);
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_cs_check(const Options& o, std::ostream& out) {
  const MomentFunctional mf = require_measure(o);
  const FunctionalSpec spec = require_functional(o);
  if (o.max_degree < 0 || o.trials < 1) throw Error(ErrorKind::InvalidArgument, "bad --max-degree or --trials");
  const BimodElement fixed =
      o.element.empty() ? BimodElement() : parse_element(o.element, spec.required_tag());
  Sampler s(o.seed);
  int failures = 0;
  CauchySchwarzReport shown;
  bool have_failure = false;
  for (int t = 0; t < o.trials; ++t) {
    const Poly a = s.poly(o.max_degree);
    const BimodElement x = o.element.empty() ? random_element(s, spec, o.max_degree) : fixed;
    const auto r = cauchy_schwarz_check(spec, a, x, mf);
    if (!r.holds) ++failures;
    if (!have_failure) shown = r;
    have_failure = have_failure || !r.holds;
  }
  const json report = {{"check", "cauchy-schwarz"}, {"inputs", common_inputs(o)}, {"lhs", to_json(shown.lhs_sq)},
                       {"rhs", to_json(shown.bound)}, {"equal", shown.equality}, {"holds", failures == 0},
                       {"passed", o.trials - failures}, {"failures", failures}};
  emit(report, o.text, out);
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_probe(const Options& o, std::ostream& out) {
  const MomentFunctional mf = require_measure(o);
  const std::vector<int> degrees = parse_degree_range(o.degrees);
  json inputs = {{"measure", measure_input(o.measure)}, {"degrees", o.degrees}};
  ProbeReport r;
  if (o.multiplication) {
    inputs["probe"] = "multiplication";
    r = multiplication_probe(mf, degrees);
  } else {
    const FunctionalSpec spec = require_functional(o);
    if (o.element.empty()) throw Error(ErrorKind::InvalidArgument, "--element is required");
    inputs["functional"] = o.functional;
    inputs["element"] = o.element;
    r = boundedness_probe(spec, parse_element(o.element, spec.required_tag()), mf, degrees);
  }
  json lambda = json::array();
  for (double l : r.lambda) lambda.push_back(to_json_double(l));
  const json report = {{"check", "probe"},      {"inputs", inputs},
                       {"degrees", r.degrees},  {"lambda", lambda},
                       {"tolerance", to_json_double(kProbeTolerance)}, {"verdict", to_string(r.verdict)}};
  emit(report, o.text, out);
  return kExitOk;
}

int cmd_lemma_check(const Options& o, std::ostream& out) {
  if (o.trials < 1 || o.max_dim < 1 || o.samples < 1) {
    throw Error(ErrorKind::InvalidArgument, "--trials, --max-dim and --samples must be positive");
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> dim(1, o.max_dim);
  int failures = 0;
  LemmaReport worst;
  double worst_ratio = -1.0;
  for (int t = 0; t < o.trials; ++t) {
    const int n = dim(rng);
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = {u(rng), u(rng)};
    const auto r = operator_norm_lemma_check(m, rng(), o.samples);
    if (!r.holds) ++failures;
    const double ratio = r.numerical_radius > 0 ? r.norm / r.numerical_radius : 0.0;
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst = r;
    }
  }
  const json report = {{"check", "numerical-radius-bound"},
                       {"inputs", {{"trials", o.trials}, {"seed", o.seed}, {"max_dim", o.max_dim},
                                   {"samples", o.samples}}},
                       {"M", to_json_double(worst.numerical_radius)},
                       {"norm", to_json_double(worst.norm)},
                       {"max_ratio", to_json_double(worst_ratio)},
                       {"holds", failures == 0},
                       {"failures", failures}};
  emit(report, o.text, out);
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  std::ostringstream lines;
  const auto results = run_acceptance(o.seed, o.json ? lines : out);
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (o.json) {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                     {"seconds", to_json_double(r.seconds)}});
    }
    out << json{{"check", "selftest"}, {"inputs", {{"seed", o.seed}}}, {"criteria", arr}, {"passed", all}}.dump(2)
        << "\n";
  }
  return all ? kExitOk : kExitCheckFailed;
}

void add_format_flags(CLI::App* cmd, Options& o) {
  auto* j = cmd->add_flag("--json", o.json, "JSON output");
  auto* t = cmd->add_flag("--text", o.text, "plain text output");
  j->excludes(t);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact *-bimodule and GNS verification tool", "starbimod"};
  app.require_subcommand(1);
  Options o;

  auto* normal = app.add_subcommand("normal-order", "print the normal-ordered form of a Weyl expression");
  normal->add_option("expression", o.expression, "expression over q, p, d, i")->required();
  add_format_flags(normal, o);

  auto* theta = app.add_subcommand("theta-map", "apply vartheta and theta_2 to an element of X_2");
  theta->add_option("--element", o.element, "expression or JSON file")->required();
  theta->add_option("--max-degree", o.max_degree, "table size");
  theta->add_option("--functional", o.functional, "also tabulate theta_F on monomials");
  add_format_flags(theta, o);

  auto* gns = app.add_subcommand("gns-check", "verify F(a x b) = <theta_F(x) b, a^+> on random inputs");
  auto* cs = app.add_subcommand("cs-check", "verify |F(a^+ x)|^2 <= f(h^+ h) f(a^+ a) on random inputs");
  for (auto* c : {gns, cs}) {
    c->add_option("--measure", o.measure, "measure JSON file")->required();
    c->add_option("--functional", o.functional, "F0, F1, F2, gauss-poly:<poly> or gauss-atoms:FILE")->required();
    c->add_option("--element", o.element, "fixed element (expression or JSON file)");
    c->add_option("--max-degree", o.max_degree, "degree bound for a and b");
    c->add_option("--trials", o.trials, "number of random cases");
    c->add_option("--seed", o.seed, "random seed");
    add_format_flags(c, o);
  }

  auto* probe = app.add_subcommand("probe", "floating-point boundedness probe over a degree range");
  probe->add_option("--measure", o.measure, "measure JSON file")->required();
  probe->add_option("--functional", o.functional, "F0, F1, F2, gauss-poly:<poly> or gauss-atoms:FILE");
  probe->add_option("--element", o.element, "hermitian element (expression or JSON file)");
  probe->add_option("--degrees", o.degrees, "degree range A..B");
  probe->add_flag("--multiplication", o.multiplication, "probe multiplication by q instead of theta_F(x)");
  add_format_flags(probe, o);

  auto* lemma = app.add_subcommand("lemma-check", "check ||T|| <= 4 sup|<T eta, eta>| on random matrices");
  lemma->add_option("--trials", o.trials, "number of matrices");
  lemma->add_option("--seed", o.seed, "random seed");
  lemma->add_option("--max-dim", o.max_dim, "largest matrix dimension");
  lemma->add_option("--samples", o.samples, "random unit vectors per matrix");
  add_format_flags(lemma, o);

  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  self->add_option("--seed", o.seed, "random seed");
  add_format_flags(self, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*normal) return cmd_normal_order(o, out);
    if (*theta) return cmd_theta_map(o, out);
    if (*gns) return cmd_gns_check(o, out);
    if (*cs) return cmd_cs_check(o, out);
    if (*probe) return cmd_probe(o, out);
    if (*lemma) return cmd_lemma_check(o, out);
    if (*self) return cmd_selftest(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace starbimod::cli
