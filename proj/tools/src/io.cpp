// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#include "starbimod/cli/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "starbimod/cli/parser.hpp"
#include "starbimod/error.hpp"

namespace starbimod::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing JSON field \"") + key + "\"");
  return j.at(key);
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad("expected a scalar string, got " + j.dump());
}

Poly q_only(const WeylElement& u, const std::string& src) {
  if (u.d_degree() > 0) bad("expected a polynomial in q, got \"" + src + "\"");
  return u.d_coefficient(0);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
}

MomentFunctional measure_from_json(const json& j) {
  const std::string type = field(j, "type").get<std::string>();
  if (type == "atomic") {
    std::vector<Atom> atoms;
    for (const auto& a : field(j, "atoms")) {
      atoms.push_back({parse_rational(scalar_text(field(a, "x"))), parse_rational(scalar_text(field(a, "w")))});
    }
    return MomentFunctional::atomic(std::move(atoms));
  }
  if (type == "moments") {
    std::vector<Scalar> m;
    for (const auto& v : field(j, "values")) m.push_back(parse_scalar(scalar_text(v)));
    return MomentFunctional::from_moments(std::move(m));
  }
  bad("unknown measure type \"" + type + "\"");
}

json to_json(const MomentFunctional& mf) {
  if (mf.is_atomic()) {
    json atoms = json::array();
    for (const auto& a : mf.atoms()) atoms.push_back({{"x", to_string(a.point)}, {"w", to_string(a.weight)}});
    return {{"type", "atomic"}, {"atoms", atoms}};
  }
  json values = json::array();
  for (const auto& m : mf.moments(*mf.moment_count())) values.push_back(to_string(m));
  return {{"type", "moments"}, {"values", values}};
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) bad("polynomial literal must be an array, got " + j.dump());
  std::vector<std::string> lit;
  for (const auto& c : j) lit.push_back(scalar_text(c));
  return from_literal(lit);
}

json to_json(const Poly& p) { return to_literal(p); }

BimodElement bimod_from_json(const json& j) {
  const GeneratorTag tag = parse_tag(field(j, "tag").get<std::string>());
  if (j.contains("triple")) {
    if (tag != GeneratorTag::D2) bad("\"triple\" is only meaningful for d2 elements");
    const json& t = j.at("triple");
    if (!t.is_array() || t.size() != 3) bad("\"triple\" must hold three polynomials");
    return from_triple({poly_from_json(t[0]), poly_from_json(t[1]), poly_from_json(t[2])});
  }
  std::vector<BimodElement::Term> terms;
  for (const auto& pair : field(j, "terms")) {
    if (!pair.is_array() || pair.size() != 2) bad("each term must be a pair [polyA, polyB]");
    terms.emplace_back(poly_from_json(pair[0]), poly_from_json(pair[1]));
  }
  return BimodElement(tag, std::move(terms));
}

json to_json(const BimodElement& x) {
  json terms = json::array();
  for (const auto& [a, b] : x.terms()) terms.push_back(json::array({to_json(a), to_json(b)}));
  json out = {{"tag", to_string(x.tag())}, {"terms", terms}};
  if (x.tag() == GeneratorTag::D2) {
    const auto t = coefficient_triple(x);
    out["triple"] = json::array({to_json(t.h0), to_json(t.h1), to_json(t.h2)});
  }
  return out;
}

json to_json(const Scalar& s) { return to_string(s); }
json to_json(const Rational& r) { return to_string(r); }
json to_json(const WeylElement& u) { return to_string(u); }

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json to_json_double(double v) { return json::parse(format_double(v)); }

FunctionalSpec parse_functional(const std::string& text) {
  if (text == "F0") return FunctionalSpec::f0();
  if (text == "F1") return FunctionalSpec::f1();
  if (text == "F2") return FunctionalSpec::f2();
  const std::string poly_prefix = "gauss-poly:";
  const std::string atoms_prefix = "gauss-atoms:";
  if (text.rfind(poly_prefix, 0) == 0) {
    const std::string body = text.substr(poly_prefix.size());
    if (!body.empty() && body.front() == '[') {
      try {
        return FunctionalSpec::gauss_poly(poly_from_json(json::parse(body)));
      } catch (const json::exception& e) {
        bad("gauss-poly weight: " + std::string(e.what()));
      }
    }
    return FunctionalSpec::gauss_poly(q_only(parse_expression(body), body));
  }
  if (text.rfind(atoms_prefix, 0) == 0) {
    const json j = load_json(text.substr(atoms_prefix.size()));
    const json& values = j.is_object() ? field(j, "values") : j;
    if (!values.is_array()) bad("gauss-atoms file must hold an array of rationals");
    std::vector<Rational> v;
    for (const auto& x : values) v.push_back(parse_rational(scalar_text(x)));
    return FunctionalSpec::gauss_atoms(std::move(v));
  }
  bad("unknown functional \"" + text + "\" (expected F0, F1, F2, gauss-poly:<poly> or gauss-atoms:FILE)");
}

BimodElement parse_element(const std::string& text, GeneratorTag tag) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(text, ec)) {
    BimodElement x = bimod_from_json(load_json(text));
    if (x.tag() != tag) {
      throw Error(ErrorKind::SpecTagMismatch, "element has tag " + to_string(x.tag()) + ", expected " + to_string(tag));
    }
    return x;
  }
  const WeylElement u = parse_expression(text);
  if (tag == GeneratorTag::Gauss) return BimodElement::gauss(q_only(u, text));
  return from_weyl(u);
}

std::vector<int> parse_degree_range(const std::string& text) {
  const auto dots = text.find("..");
  int lo = 0;
  int hi = 0;
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) bad("degree range must look like A..B");
    lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) bad("bad degree range \"" + text + "\"");
    const std::string tail = text.substr(dots + 2);
    hi = std::stoi(tail, &used);
    if (used != tail.size()) bad("bad degree range \"" + text + "\"");
  } catch (const std::logic_error&) {
    bad("bad degree range \"" + text + "\"");
  }
  if (lo < 0 || hi < lo || hi > 200) bad("degree range must satisfy 0 <= A <= B <= 200");
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

}  // namespace starbimod::cli
