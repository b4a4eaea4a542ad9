// SPDX-License-Identifier: Apache-2.0

#include "hblab/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hblab/error.hpp"

namespace hblab::json_io {

namespace {

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InvalidArgument(std::string("expected a number for ") + what);
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InvalidArgument(std::string("non-finite number for ") + what);
  return v;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidArgument(std::string("expected an integer for ") + what);
  return j.get<int>();
}

void check_same(const RationalFunction& given, const RationalFunction& expected, const char* name) {
  const RationalFunction g = given.normalized();
  const RationalFunction e = expected.normalized();
  const double scale = std::max({1.0, e.num().max_abs(), e.den().max_abs()});
  if (max_coeff_distance(g.num(), e.num()) > 1e-9 * scale || max_coeff_distance(g.den(), e.den()) > 1e-9 * scale)
    throw InvalidArgument(std::string("pair: \"") + name + "\" disagrees with p, r and lambdas");
}

}  // namespace

json parse_argument(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (!j.is_discarded()) return j;
  std::ifstream in(text);
  if (!in) throw InvalidArgument("argument is neither JSON nor a readable file: " + text);
  std::stringstream ss;
  ss << in.rdbuf();
  j = json::parse(ss.str(), nullptr, false);
  if (j.is_discarded()) throw InvalidArgument("file does not contain valid JSON: " + text);
  return j;
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {number(j, "complex"), 0.0};
  if (j.is_array() && j.size() == 2) return {number(j[0], "real part"), number(j[1], "imaginary part")};
  throw InvalidArgument("expected a complex number as a number or [re, im]");
}

json to_json(const Polynomial& p) {
  json a = json::array();
  for (const Complex& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("expected a polynomial as an array of coefficients");
  std::vector<Complex> c;
  for (const json& e : j) c.push_back(complex_from_json(e));
  return Polynomial(std::move(c));
}

json to_json(const RationalFunction& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RationalFunction rational_from_json(const json& j) {
  return RationalFunction(polynomial_from_json(field(j, "num")), polynomial_from_json(field(j, "den")));
}

json to_json(UnimodularPoint p) { return to_json(p.value()); }

UnimodularPoint point_from_json(const json& j) {
  if (j.is_object() && j.contains("angle_turns")) return UnimodularPoint::from_turns(number(j["angle_turns"], "angle_turns"));
  Complex z;
  if (j.is_object())
    z = {number(field(j, "re"), "re"), j.contains("im") ? number(j["im"], "im") : 0.0};
  else
    z = complex_from_json(j);
  try {
    return UnimodularPoint::normalized(z);
  } catch (const Error&) {
    throw InvalidArgument("point is not on the unit circle (tolerance 1e-9)");
  }
}

std::vector<UnimodularPoint> points_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of unimodular points");
  std::vector<UnimodularPoint> out;
  for (const json& e : j) out.push_back(point_from_json(e));
  return out;
}

json to_json(const TrigPolynomial& v) {
  json c = json::array();
  for (int k = 0; k <= v.bandwidth(); ++k) c.push_back({k, v.coeff(k).real(), v.coeff(k).imag()});
  return {{"c", c}};
}

TrigPolynomial trig_from_json(const json& j) {
  const json& c = field(j, "c");
  if (!c.is_array()) throw InvalidArgument("trig: \"c\" must be an array");
  std::vector<Complex> coeffs;
  for (const json& e : c) {
    if (!e.is_array() || e.size() != 3) throw InvalidArgument("trig: entries must be [j, re, im]");
    const int k = integer(e[0], "trig index");
    if (k < 0) throw InvalidArgument("trig: give nonnegative indices only");
    if (static_cast<std::size_t>(k) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(k) + 1);
    coeffs[static_cast<std::size_t>(k)] += Complex(number(e[1], "re"), number(e[2], "im"));
  }
  if (!coeffs.empty() && std::abs(coeffs[0].imag()) > 1e-12 * std::max(1.0, std::abs(coeffs[0])))
    throw InvalidArgument("trig: c_0 must be real");
  return TrigPolynomial(std::move(coeffs));
}

json to_json(const CanonicalPair& pair) {
  json l = json::array();
  for (const UnimodularPoint& p : pair.lambdas) l.push_back(to_json(p));
  return {{"b", to_json(pair.b.normalized())},
          {"a", to_json(pair.a.normalized())},
          {"lambdas", l},
          {"p", to_json(pair.p)},
          {"r", to_json(pair.r)}};
}

CanonicalPair pair_from_json(const json& j) {
  if (j.is_object() && j.contains("prop3")) {
    const json& s = j["prop3"];
    return prop3_pair(point_from_json(field(s, "lambda")), integer(field(s, "m"), "m"));
  }
  if (j.is_object() && j.contains("sarason")) return sarason_pair(point_from_json(field(j["sarason"], "lambda")));
  if (j.is_object() && j.contains("phi")) {
    const json& s = j["phi"];
    const std::vector<UnimodularPoint> ls = points_from_json(field(s, "lambdas"));
    return pair_from_phi(polynomial_from_json(field(s, "p")), ls);
  }

  CanonicalPair pair = assemble_pair(polynomial_from_json(field(j, "p")), polynomial_from_json(field(j, "r")),
                                     points_from_json(field(j, "lambdas")));
  if (j.contains("b")) check_same(rational_from_json(j["b"]), pair.b, "b");
  if (j.contains("a")) check_same(rational_from_json(j["a"]), pair.a, "a");
  if (pair.r[0].real() <= 0.0 || std::abs(pair.r[0].imag()) > 1e-12 * std::abs(pair.r[0]))
    throw InvalidArgument("pair: r(0) must be real and positive");
  const PairCheck c = check_pair(pair);
  if (c.identity_residual > 1e-8) throw InvalidArgument("pair: |a|^2 + |b|^2 = 1 fails on the circle");
  if (!(c.min_r_root_modulus > 1.0)) throw InvalidArgument("pair: r has a zero in the closed disk");
  return pair;
}

json to_json(const GramMatrix& g) {
  json e = json::array();
  for (int i = 0; i <= g.N; ++i)
    for (int k = 0; k <= g.N; ++k) e.push_back(to_json(g.entries(i, k)));
  return {{"n", g.N}, {"entries", e}};
}

json to_json(const BlaschkeProduct& b) {
  json z = json::array();
  for (const Complex& c : b.zeros()) z.push_back(to_json(c));
  return {{"zeros", z}, {"z_power", b.z_power()}, {"const", to_json(b.unimodular_const())}};
}

BlaschkeProduct blaschke_from_json(const json& j) {
  std::vector<Complex> zeros;
  if (j.is_array()) {
    for (const json& e : j) zeros.push_back(complex_from_json(e));
    return BlaschkeProduct(std::move(zeros));
  }
  for (const json& e : field(j, "zeros")) zeros.push_back(complex_from_json(e));
  const int k = j.contains("z_power") ? integer(j["z_power"], "z_power") : 0;
  const Complex c = j.contains("const") ? complex_from_json(j["const"]) : Complex{1.0, 0.0};
  return BlaschkeProduct(std::move(zeros), k, c);
}

}  // namespace hblab::json_io
