// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hblab/factor.hpp"
#include "hblab/hardy.hpp"
#include "hblab/pairs.hpp"
#include "hblab/polynomial.hpp"
#include "hblab/rational.hpp"

// JSON encodings. Every reader throws InvalidArgument on malformed input.
//
//   complex     number | [re, im]
//   polynomial  [c_0, c_1, ...] of complex, ascending
//   rational    {"num": polynomial, "den": polynomial}
//   point       number | [re, im] | {"re": x, "im": y} | {"angle_turns": t}
//               rescaled onto the circle when within 1e-9 of it
//   trig        {"c": [[j, re, im], ...]} for j >= 0; c_{-j} = conj(c_j)
//   pair        {"b", "a": rational, "lambdas": [point...], "p", "r": polynomial}
//               or one of the shorthands {"prop3": {"lambda", "m"}},
//               {"sarason": {"lambda"}}, {"phi": {"p", "lambdas"}}
//   gram        {"n": N, "entries": [[re, im], ...]} row-major
//   blaschke    {"zeros": [complex...], "z_power": k, "const": complex}
namespace hblab::json_io {

using nlohmann::json;

/// Parses `text` as JSON, or when that fails and `text` names a readable
/// file, parses the file's contents.
json parse_argument(const std::string& text);

json to_json(Complex z);
Complex complex_from_json(const json& j);

json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json to_json(const RationalFunction& f);
RationalFunction rational_from_json(const json& j);

json to_json(UnimodularPoint p);
UnimodularPoint point_from_json(const json& j);
std::vector<UnimodularPoint> points_from_json(const json& j);

json to_json(const TrigPolynomial& v);
TrigPolynomial trig_from_json(const json& j);

/// b and a are written with den(0) = 1.
json to_json(const CanonicalPair& pair);
/// Rebuilds the pair from p, r and lambdas; b and a, when present, must agree
/// with them, and the pair identity must hold to 1e-8.
CanonicalPair pair_from_json(const json& j);

json to_json(const GramMatrix& g);

json to_json(const BlaschkeProduct& b);
BlaschkeProduct blaschke_from_json(const json& j);

}  // namespace hblab::json_io
