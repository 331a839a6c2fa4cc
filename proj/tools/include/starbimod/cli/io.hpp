// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "starbimod/bimodule.hpp"
#include "starbimod/gns.hpp"
#include "starbimod/moments.hpp"

namespace starbimod::cli {

using nlohmann::json;

/// Reads a whole file; throws Error(InvalidArgument) if it cannot be opened.
std::string read_file(const std::string& path);
json load_json(const std::string& path);

// Measures: {"type":"atomic","atoms":[{"x":"-1","w":"1"},...]} or
// {"type":"moments","values":["3","0","2",...]}.
MomentFunctional measure_from_json(const json& j);
json to_json(const MomentFunctional& mf);

// Polynomials: an array of scalar strings, lowest degree first.
Poly poly_from_json(const json& j);
json to_json(const Poly& p);

// Bimodule elements: {"tag":"d2"|"gauss","terms":[[polyA,polyB],...]}, or for
// d2 {"tag":"d2","triple":[h0,h1,h2]}.
BimodElement bimod_from_json(const json& j);
json to_json(const BimodElement& x);

json to_json(const Scalar& s);
json to_json(const Rational& r);
json to_json(const WeylElement& u);

/// 17 significant digits.
std::string format_double(double v);
json to_json_double(double v);

/// F0 | F1 | F2 | gauss-poly:<poly> | gauss-atoms:FILE, where <poly> is a
/// q-only expression or a JSON polynomial literal, and FILE holds an array of
/// rationals or {"values":[...]}.
FunctionalSpec parse_functional(const std::string& text);

/// An element given as a JSON file or as an expression. D2 expressions must
/// normal-order into h0 d^2 + 2 h1 d + h2 (Error(NotInBimodule) otherwise);
/// for the Gauss tag the expression is the polynomial p of e^{-q^2} p.
BimodElement parse_element(const std::string& text, GeneratorTag tag);

/// "A..B" with 0 <= A <= B.
std::vector<int> parse_degree_range(const std::string& text);

}  // namespace starbimod::cli
