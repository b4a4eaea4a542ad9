// SPDX-License-Identifier: Apache-2.0

#include "hblab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "hblab/dirichlet.hpp"
#include "hblab/error.hpp"
#include "hblab/factor.hpp"
#include "hblab/hardy.hpp"
#include "hblab/identities.hpp"
#include "hblab/isowander.hpp"
#include "hblab/json_io.hpp"
#include "hblab/roots.hpp"

namespace hblab::suites {

namespace {

using json = nlohmann::json;
using json_io::to_json;

constexpr int kFejerRieszSamples = 4096;
constexpr int kQuadRadial = 400;
constexpr int kQuadAngular = 1024;

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) {
    // seed_seq consumes 32-bit words.
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    eng_.seed(seq);
  }

  double normal() { return normal_(eng_); }
  double uniform() { return uniform_(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  Complex cnormal() { return {normal(), normal()}; }
  UnimodularPoint point() { return UnimodularPoint::from_turns(uniform()); }

  Polynomial poly(int max_degree) {
    std::vector<Complex> c(static_cast<std::size_t>(integer(0, max_degree)) + 1);
    for (Complex& x : c) x = cnormal();
    return Polynomial(std::move(c));
  }

  std::vector<UnimodularPoint> points(int m) {
    std::vector<UnimodularPoint> out;
    for (int j = 0; j < m; ++j) out.push_back(point());
    return out;
  }

  /// Degree <= m, bounded away from zero at every lambda_j.
  Polynomial numerator(int m, std::span<const UnimodularPoint> lambdas) {
    while (true) {
      Polynomial p = poly(m);
      bool ok = !p.is_zero();
      for (const UnimodularPoint& l : lambdas) ok = ok && std::abs(p(l.value())) > 1e-3 * p.max_abs();
      if (ok) return p;
    }
  }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_;
  std::uniform_real_distribution<double> uniform_;
};

std::uint64_t stream_id(const std::string& suite) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : suite) h = (h ^ c) * 1099511628211ull;
  return h;
}

json points_json(std::span<const UnimodularPoint> ps) {
  json a = json::array();
  for (const UnimodularPoint& p : ps) a.push_back(to_json(p));
  return a;
}

std::vector<UnimodularPoint> default_lambdas(const Options& o) {
  if (o.lambda) return {*o.lambda};
  return {UnimodularPoint(1.0), UnimodularPoint(Complex(0.0, 1.0)), UnimodularPoint::from_turns(0.37)};
}

std::vector<int> m_range(const Options& o, int hi) {
  if (o.m) return {*o.m};
  std::vector<int> ms;
  for (int m = 1; m <= hi; ++m) ms.push_back(m);
  return ms;
}

class Builder {
 public:
  Builder(std::string suite, Report& report) : suite_(std::move(suite)), report_(report) {}

  Instance& add(std::string name) {
    report_.instances.push_back(Instance{suite_, std::move(name)});
    return report_.instances.back();
  }

  /// First writer wins, so `all` keeps one entry per key.
  void summarize(const std::string& key, json value) {
    if (!report_.summary.contains(key)) report_.summary[key] = std::move(value);
  }

 private:
  std::string suite_;
  Report& report_;
};

// ---------------------------------------------------------------------------

void lemma1_suite(const Options& o, Builder& b) {
  std::vector<int> ms = o.m ? std::vector<int>{*o.m} : std::vector<int>{1, 2, 3, 4, 5};
  for (int m : ms) {
    const int N = o.order.value_or(2 * m + 8);
    const Lemma1Result r = lemma1_check(m, N);
    Instance& in = b.add("m=" + std::to_string(m));
    in.inputs = {{"m", m}, {"order", N}};
    in.residuals = {{"first_mismatch", r.first_mismatch ? json::array({r.first_mismatch->first, r.first_mismatch->second})
                                                        : json(nullptr)}};
    in.thresholds = {{"equality", "exact"}};
    in.pass = r.pass;
    if (o.m) {
      b.summarize("pass", r.pass);
      b.summarize("first_mismatch", in.residuals["first_mismatch"]);
    }

    Instance& bc = b.add("binomial-series m=" + std::to_string(m));
    bc.inputs = {{"m", m}, {"order", N}};
    bc.pass = binomial_crosscheck(m, N);
    bc.residuals = {{"equal_to_geometric_power", bc.pass}};
    bc.thresholds = {{"equality", "exact"}};
  }

  const int m = ms.front();
  const int N = o.order.value_or(2 * m + 8);
  const Lemma1Result bad = lemma1_check(m, N, 1);
  Instance& in = b.add("corrupted-constant control");
  in.inputs = {{"m", m}, {"order", N}, {"rhs_constant_offset", 1}};
  in.residuals = {{"first_mismatch", bad.first_mismatch ? json::array({bad.first_mismatch->first, bad.first_mismatch->second})
                                                        : json(nullptr)}};
  in.thresholds = {{"expected_first_mismatch", json::array({0, 0})}};
  in.pass = !bad.pass && bad.first_mismatch == std::make_pair(0, 0);
}

// ---------------------------------------------------------------------------

void isometry_instance(Builder& b, const std::string& name, const CanonicalPair& pair, json pair_inputs, int m, int N,
                       double tol, std::optional<double> min_strict_gap, bool summarize) {
  const IsometryVerdict v = strict_2m_check(pair, m, N, tol);
  Instance& in = b.add(name);
  in.inputs = std::move(pair_inputs);
  in.inputs["m"] = m;
  in.inputs["N"] = N;
  in.residuals = {{"max_defect_2m", v.max_defect_2m},
                  {"max_defect_2m_minus_1", v.max_defect_2m_minus_1},
                  {"is_2m_isometry", v.is_2m_isometry},
                  {"is_strict", v.is_strict ? json(*v.is_strict) : json(nullptr)}};
  in.thresholds = {{"max_defect_2m_below", tol}, {"max_defect_2m_minus_1_above", 1e3 * tol}};
  in.pass = v.is_2m_isometry && v.is_strict.value_or(true);
  if (summarize)
    for (const char* key : {"is_2m_isometry", "is_strict", "max_defect_2m", "max_defect_2m_minus_1"})
      b.summarize(key, in.residuals[key]);
  if (min_strict_gap) {
    in.thresholds["max_defect_2m_minus_1_above"] = std::max(1e3 * tol, *min_strict_gap);
    in.pass = in.pass && v.max_defect_2m_minus_1 > *min_strict_gap;
  }
}

void structural_instances(Builder& b, const std::string& tag, const CanonicalPair& pair, int m, int N) {
  double pascal = 0.0;
  for (int n = 1; n <= 2 * m; ++n) pascal = std::max(pascal, pascal_residual(pair, n, N));
  Instance& pi = b.add("pascal " + tag);
  pi.inputs = {{"N", N}, {"n_max", 2 * m}};
  pi.residuals = {{"max_pascal_residual_relative", pascal}};
  pi.thresholds = {{"max_pascal_residual_relative", 1e-12}};
  pi.pass = pascal <= 1e-12;

  const int NG = 40;
  const GramMatrix g = hb_gram(pair, NG);
  Instance& gi = b.add("gram " + tag);
  gi.inputs = {{"N", NG}};
  const double herm = g.hermitian_residual() / g.max_abs();
  gi.residuals = {{"hermitian_residual_relative", herm},
                  {"cholesky_ok", g.positive_definite()},
                  {"min_eigenvalue", g.min_eigenvalue()},
                  {"min_diagonal", g.entries.diagonal().real().minCoeff()}};
  gi.thresholds = {{"hermitian_residual_relative", 1e-12}, {"min_diagonal", 1.0}};
  gi.pass = herm <= 1e-12 && g.positive_definite() && g.min_eigenvalue() > 0.0 &&
            g.entries.diagonal().real().minCoeff() >= 1.0 - 1e-12;
}

void isometry_suite(const Options& o, Builder& b) {
  const double tol = o.tol.value_or(1e-8);
  const int N = o.N.value_or(8);
  if (o.pair) {
    const int m = o.m.value_or(o.pair->m());
    isometry_instance(b, "given pair", *o.pair, {{"pair", to_json(*o.pair)}}, m, N, tol, std::nullopt, true);
    structural_instances(b, "given pair", *o.pair, m, N);
    return;
  }

  const UnimodularPoint lambda = o.lambda.value_or(UnimodularPoint(1.0));
  for (int m : m_range(o, o.max_m)) {
    const CanonicalPair pair = prop3_pair(lambda, m);
    const std::string tag = "prop3 m=" + std::to_string(m);
    isometry_instance(b, tag, pair, {{"pair", {{"prop3", {{"lambda", to_json(lambda)}, {"m", m}}}}}}, m, N, tol, 1e-2, o.m.has_value());
    structural_instances(b, tag, pair, m, N);
  }

  // <z^i, z^j>_b = delta_ij + min(i, j) for the Sarason pair at lambda = 1.
  {
    const CanonicalPair pair = prop3_pair(UnimodularPoint(1.0), 1);
    const int NC = 10;
    const GramMatrix g = hb_gram(pair, NC + 2);
    double gram_res = 0.0;
    for (int i = 0; i <= NC; ++i)
      for (int j = 0; j <= NC; ++j)
        gram_res = std::max(gram_res, std::abs(g.entries(i, j) - Complex((i == j ? 1.0 : 0.0) + std::min(i, j))));
    const double d2 = defect_matrix(g, 2, NC).max_abs();
    const Complex d100 = defect_matrix(g, 1, NC).entries(0, 0);
    Instance& in = b.add("closed-form gram m=1 lambda=1");
    in.inputs = {{"N", NC}};
    in.residuals = {{"gram_vs_delta_plus_min", gram_res}, {"max_defect_2", d2}, {"defect_1_at_00", to_json(d100)}};
    in.thresholds = {{"gram_vs_delta_plus_min", 1e-12}, {"max_defect_2", 1e-12}, {"defect_1_at_00_minus_1", 1e-12}};
    in.pass = gram_res <= 1e-12 && d2 <= 1e-12 && std::abs(d100 - 1.0) <= 1e-12;
  }

  // Reproducing kernel truncations.
  {
    const CanonicalPair pair = prop3_pair(UnimodularPoint(1.0), 1);
    const double r60 = reproducing_check(pair, Polynomial::monomial(2), 0.5, 60);
    Instance& in = b.add("reproducing kernel f=z^2 w=1/2");
    in.inputs = {{"N", 60}};
    in.residuals = {{"residual", r60}};
    in.thresholds = {{"residual", 1e-8}};
    in.pass = r60 <= 1e-8;

    Rng rng(o.seed, stream_id("isometry/kernel"));
    double worst_increase = 0.0;
    json cases = json::array();
    for (int i = 0; i < 10; ++i) {
      const int m = 1 + i % 3;
      const CanonicalPair pr = prop3_pair(rng.point(), m);
      const Polynomial f = rng.poly(8);
      const Complex w = std::polar(0.9 * rng.uniform(), kTwoPi * rng.uniform());
      const double r40 = reproducing_check(pr, f, w, 40);
      const double r80 = reproducing_check(pr, f, w, 80);
      worst_increase = std::max(worst_increase, r80 - r40);
      cases.push_back({{"m", m}, {"w", to_json(w)}, {"residual_40", r40}, {"residual_80", r80}});
    }
    Instance& mono = b.add("reproducing kernel monotone in N");
    mono.inputs = {{"seed", o.seed}, {"cases", cases}};
    mono.residuals = {{"max_increase_40_to_80", worst_increase}};
    mono.thresholds = {{"max_increase_40_to_80", 1e-12}};
    mono.pass = worst_increase <= 1e-12;
  }
}

// ---------------------------------------------------------------------------

void theorem1_suite(const Options& o, Builder& b) {
  const double tol = o.tol.value_or(1e-6);
  Rng rng(o.seed, stream_id("theorem1"));

  struct Anchor {
    const char* name;
    Polynomial f;
    int m;
    double expected;
  };
  const std::vector<Anchor> anchors = {
      {"anchor f=z-1 m=1", Polynomial{-1.0, 1.0}, 1, 1.0},
      {"anchor f=(z-1)^2 m=2", Polynomial{1.0, -2.0, 1.0}, 2, 6.0},
      {"anchor deg f < m", Polynomial{1.0, 1.0}, 2, 0.0},
  };
  for (const Anchor& a : anchors) {
    const UnimodularPoint one(1.0);
    const Theorem1Result r = theorem1_check(a.f, one, a.m);
    const double quad = a2_norm_quadrature(theorem1_integrand(a.f, one, a.m), a.m, kQuadRadial, kQuadAngular);
    const double anchor_err = std::abs(r.area_norm - a.expected);
    const double quad_rel = std::abs(quad - r.area_norm) / std::max(1.0, r.area_norm);
    Instance& in = b.add(a.name);
    in.inputs = {{"f", to_json(a.f)}, {"lambda", to_json(one)}, {"m", a.m}};
    in.residuals = {{"area_norm", r.area_norm}, {"expected", a.expected}, {"anchor_error", anchor_err},
                    {"residual", r.residual}, {"quadrature_relative", quad_rel}};
    in.thresholds = {{"anchor_error", 1e-12}, {"residual", tol}, {"quadrature_relative", 1e-4}};
    in.pass = anchor_err <= 1e-12 && r.residual <= tol && quad_rel <= 1e-4;
  }

  for (int i = 0; i < o.instances; ++i) {
    const int m = o.m.value_or(1 + i % o.max_m);
    const UnimodularPoint lambda = o.lambda.value_or(rng.point());
    const Polynomial f = rng.poly(o.max_degree);
    const Theorem1Result r = theorem1_check(f, lambda, m);
    Instance& in = b.add("random " + std::to_string(i));
    in.inputs = {{"f", to_json(f)}, {"lambda", to_json(lambda)}, {"m", m}};
    in.residuals = {{"residual", r.residual}, {"area_norm", r.area_norm}, {"scaled_dirichlet", r.scaled_dirichlet}};
    in.thresholds = {{"residual", tol}};
    in.pass = r.residual <= tol;
    if (i < o.max_m) {
      const double quad = a2_norm_quadrature(theorem1_integrand(f, lambda, m), m, kQuadRadial, kQuadAngular);
      const double rel = std::abs(quad - r.area_norm) / std::max(1.0, r.area_norm);
      in.residuals["quadrature_relative"] = rel;
      in.thresholds["quadrature_relative"] = 1e-4;
      in.pass = in.pass && rel <= 1e-4;
    }
  }
}

// ---------------------------------------------------------------------------

void prop4_suite(const Options& o, Builder& b) {
  const double tol = o.tol.value_or(1e-9);
  Rng rng(o.seed, stream_id("prop4"));
  for (int i = 0; i < o.instances; ++i) {
    const int m = o.m.value_or(1 + i % o.max_m);
    const std::vector<UnimodularPoint> ls = o.lambda ? std::vector<UnimodularPoint>(static_cast<std::size_t>(m), *o.lambda)
                                                     : rng.points(m);
    const Polynomial p = rng.numerator(m, ls);
    const Polynomial f = rng.poly(o.max_degree);
    const CanonicalPair pair = pair_from_phi(p, ls);
    const double r = prop4_residual(pair, reflect(p, m), f);
    Instance& in = b.add("random " + std::to_string(i));
    in.inputs = {{"m", m}, {"lambdas", points_json(ls)}, {"p", to_json(p)}, {"f", to_json(f)}};
    in.residuals = {{"relative_defect", r}};
    in.thresholds = {{"relative_defect", tol}};
    in.pass = r <= tol;
  }

  Rng crng(o.seed, stream_id("prop4/control"));
  const int m = 2;
  const std::vector<UnimodularPoint> ls = crng.points(m);
  const Polynomial p = crng.numerator(m, ls);
  const Polynomial f = crng.poly(o.max_degree);
  const CanonicalPair pair = pair_from_phi(p, ls);
  const Polynomial q = reflect(p, m) + Polynomial{0.0, 0.1};
  const double r = prop4_residual(pair, q, f);
  Instance& in = b.add("perturbed q control");
  in.inputs = {{"m", m}, {"lambdas", points_json(ls)}, {"p", to_json(p)}, {"f", to_json(f)}, {"q", to_json(q)}};
  in.residuals = {{"relative_defect", r}};
  in.thresholds = {{"relative_defect_above", 1e-3}};
  in.pass = r > 1e-3;
}

// ---------------------------------------------------------------------------

struct FactorCheck {
  double sample_residual = 0.0;  // max | |r|^2 - v | / max v
  double min_root_modulus = 0.0;
  Complex r0;
};

FactorCheck check_factor(const TrigPolynomial& v, const Polynomial& r) {
  FactorCheck c;
  const std::vector<double> vs = v.sample(kFejerRieszSamples);
  const double vmax = *std::max_element(vs.begin(), vs.end());
  for (int k = 0; k < kFejerRieszSamples; ++k) {
    const Complex z = std::polar(1.0, kTwoPi * k / kFejerRieszSamples);
    c.sample_residual = std::max(c.sample_residual, std::abs(std::norm(r(z)) - vs[static_cast<std::size_t>(k)]));
  }
  c.sample_residual /= vmax;
  c.min_root_modulus = std::numeric_limits<double>::infinity();
  if (r.degree() >= 1)
    for (const Complex& z : find_roots(r).roots) c.min_root_modulus = std::min(c.min_root_modulus, std::abs(z));
  c.r0 = r[0];
  return c;
}

void fejer_riesz_suite(const Options& o, Builder& b) {
  const double tol = o.tol.value_or(1e-10);
  Rng rng(o.seed, stream_id("fejer-riesz"));
  for (int i = 0; i < o.instances; ++i) {
    TrigPolynomial v;
    json inputs;
    if (i % 2 == 0) {
      const int m = 1 + rng.integer(0, o.max_m - 1);
      const std::vector<UnimodularPoint> ls = rng.points(m);
      const Polynomial p = rng.numerator(m, ls);
      v = TrigPolynomial::abs_squared(boundary_factor(ls)) + TrigPolynomial::abs_squared(p);
      inputs = {{"kind", "pair"}, {"lambdas", points_json(ls)}, {"p", to_json(p)}};
    } else {
      std::vector<Complex> roots(static_cast<std::size_t>(rng.integer(1, 6)));
      for (Complex& z : roots) z = std::polar(1.05 + 3.0 * rng.uniform(), kTwoPi * rng.uniform());
      const Polynomial r0 = Polynomial::from_roots(roots, rng.cnormal());
      v = TrigPolynomial::abs_squared(r0);
      inputs = {{"kind", "outer square"}, {"r0", to_json(r0)}};
    }
    inputs["v"] = to_json(v);
    const Polynomial r = fejer_riesz(v);
    const FactorCheck c = check_factor(v, r);
    Instance& in = b.add("random " + std::to_string(i));
    in.inputs = std::move(inputs);
    in.residuals = {{"sample_residual", c.sample_residual}, {"min_root_modulus", c.min_root_modulus},
                    {"r0", to_json(c.r0)}};
    in.thresholds = {{"sample_residual", tol}, {"min_root_modulus_above", 1.0}};
    in.pass = c.sample_residual <= tol && c.min_root_modulus > 1.0 && c.r0.real() > 0.0 && c.r0.imag() == 0.0;
  }

  for (int m : m_range(o, 4)) {
    for (const UnimodularPoint& lambda : default_lambdas(o)) {
      const CanonicalPair pair = prop3_pair(lambda, m);
      const std::vector<UnimodularPoint> ls(static_cast<std::size_t>(m), lambda);
      const TrigPolynomial v = TrigPolynomial::abs_squared(boundary_factor(ls)) + TrigPolynomial::abs_squared(pair.p);
      const FactorCheck c = check_factor(v, pair.r);
      double minmod = std::abs(pair.r(lambda.value()));
      double rz = 0.0;
      for (int k = 0; k < kFejerRieszSamples; ++k) {
        const Complex z = std::polar(1.0, kTwoPi * k / kFejerRieszSamples);
        minmod = std::min(minmod, std::abs(pair.r(z)));
        rz = std::max(rz, std::abs(std::norm(pair.r(z)) - (1.0 + std::pow(std::abs(1.0 - lambda.conj() * z), 2 * m))));
      }
      const double at_lambda = std::abs(pair.r(lambda.value()) - 1.0);
      const double xcheck = prop3_crosscheck(lambda, m);
      const PairCheck pc = check_pair(pair);
      Instance& in = b.add("prop3 m=" + std::to_string(m) + " lambda=" + std::to_string(lambda.angle() / kTwoPi) + " turns");
      in.inputs = {{"lambda", to_json(lambda)}, {"m", m}};
      in.residuals = {{"sample_residual", c.sample_residual}, {"min_root_modulus", c.min_root_modulus},
                      {"r_at_lambda_minus_1", at_lambda}, {"min_circle_modulus", minmod},
                      {"modulus_identity", rz}, {"crosscheck", xcheck},
                      {"pair_identity", pc.identity_residual}, {"sup_b", pc.sup_b}, {"a0", pc.a0}};
      in.thresholds = {{"sample_residual", tol}, {"r_at_lambda_minus_1", 1e-9}, {"min_circle_modulus_minus_1", 1e-9},
                       {"modulus_identity", 1e-10}, {"crosscheck", 1e-9}, {"pair_identity", 1e-10}};
      in.pass = c.sample_residual <= tol && c.min_root_modulus > 1.0 && at_lambda <= 1e-9 &&
                std::abs(minmod - 1.0) <= 1e-9 && rz <= 1e-10 && xcheck <= 1e-9 && pc.identity_residual <= 1e-10 &&
                pc.sup_b <= 1.0 + 1e-12 && pc.a0 > 0.0;
    }
  }

  struct Control {
    const char* name;
    TrigPolynomial v;
    FactorizationError::Kind expected;
    const char* expected_name;
  };
  const std::vector<Control> controls = {
      {"control 2 + 2 cos t", TrigPolynomial({2.0, 1.0}), FactorizationError::Kind::BoundaryZero, "BoundaryZero"},
      {"control cos t", TrigPolynomial({0.0, 0.5}), FactorizationError::Kind::NotPositive, "NotPositive"},
  };
  for (const Control& ctl : controls) {
    Instance& in = b.add(ctl.name);
    in.inputs = {{"v", to_json(ctl.v)}};
    in.thresholds = {{"expected_error", ctl.expected_name}};
    try {
      (void)fejer_riesz(ctl.v);
      in.residuals = {{"error", nullptr}};
      in.pass = false;
    } catch (const FactorizationError& e) {
      in.residuals = {{"error", e.what()}};
      in.pass = e.kind() == ctl.expected;
    }
  }
}

// ---------------------------------------------------------------------------

void wandering_suite(const Options& o, Builder& b) {
  const double orth_tol = o.tol.value_or(1e-8);
  const double mem_tol = 1e-7;
  const int K = o.K.value_or(10);
  const int J = o.J.value_or(20);
  Rng rng(o.seed, stream_id("wandering"));

  std::vector<std::pair<std::string, CanonicalPair>> pairs;
  if (o.pair) {
    pairs.emplace_back("given pair", *o.pair);
  } else {
    const UnimodularPoint lambda = o.lambda.value_or(UnimodularPoint(1.0));
    for (int m : m_range(o, o.max_m)) pairs.emplace_back("prop3 m=" + std::to_string(m), prop3_pair(lambda, m));
  }

  std::vector<BlaschkeProduct> us;
  if (o.u_zeros) {
    us.emplace_back(*o.u_zeros);
  } else {
    us.emplace_back();
    us.emplace_back(std::vector<Complex>{0.5});
    us.emplace_back(std::vector<Complex>{{0.3, 0.4}, -0.5});
    us.emplace_back(std::vector<Complex>{{0.0, 0.6}, -0.2, {0.7, 0.1}});
  }

  for (const auto& [tag, pair] : pairs) {
    const json pj = to_json(pair);

    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
      const Polynomial f = rng.poly(o.max_degree);
      const double nb = std::sqrt(hb_norm_sq_a_multiple(pair, f));
      worst = std::max(worst, std::abs(nb - f.norm()) / f.norm());
    }
    Instance& iso = b.add(tag + " multiplication by a");
    iso.inputs = {{"pair", pj}, {"seed", o.seed}, {"count", 5}};
    iso.residuals = {{"max_relative", worst}};
    iso.thresholds = {{"max_relative", 1e-10}};
    iso.pass = worst <= 1e-10;

    for (std::size_t k = 0; k < us.size(); ++k) {
      const WanderingCertificate c = wandering_check(pair, us[k], K, J, orth_tol, mem_tol);
      Instance& in = b.add(tag + " u#" + std::to_string(k));
      in.inputs = {{"pair", pj}, {"u", to_json(us[k])}, {"K", K}, {"J", J}};
      in.residuals = {{"orthogonality", c.orthogonality_residuals},
                      {"membership", c.membership_residuals},
                      {"hb_norm_sq_minus_1", std::abs(c.hb_norm_sq - 1.0)},
                      {"B_m", to_json(c.B_m)}};
      in.thresholds = {{"orthogonality", orth_tol}, {"membership", mem_tol}, {"hb_norm_sq_minus_1", 1e-10}};
      in.pass = c.pass() && std::abs(c.hb_norm_sq - 1.0) <= 1e-10;
    }

    const BlaschkeProduct B = extract_Bm(pair.lambdas, pair.p);
    const RationalFunction zb(Polynomial::monomial(1) * B.as_rational().num(), B.as_rational().den());
    const std::vector<double> neg = membership_residuals(zb, B, 0);
    Instance& ctl = b.add(tag + " control h0 = z B_m");
    ctl.inputs = {{"pair", pj}, {"B_m", to_json(B)}};
    ctl.residuals = {{"membership_j0", neg.front()}};
    ctl.thresholds = {{"membership_j0_above", mem_tol}};
    ctl.pass = neg.front() > mem_tol;

    if (pair.p.degree() <= pair.m()) {
      const double w = W_identity_check(pair.lambdas, pair.p);
      Instance& wi = b.add(tag + " W identity");
      wi.inputs = {{"pair", pj}};
      wi.residuals = {{"residual", w}};
      wi.thresholds = {{"residual", 1e-9}};
      wi.pass = w <= 1e-9;
    }
  }
}

// ---------------------------------------------------------------------------

void dm_norm_suite(const Options& o, Builder& b) {
  const double tol = o.tol.value_or(1e-9);
  Rng rng(o.seed, stream_id("dm-norm"));
  for (int m : m_range(o, o.max_m)) {
    for (const UnimodularPoint& lambda : default_lambdas(o)) {
      const CanonicalPair pair = prop3_pair(lambda, m);
      double worst = 0.0;
      int worst_i = -1;
      Polynomial worst_f;
      for (int i = 0; i < o.instances; ++i) {
        const Polynomial f = rng.poly(o.max_degree);
        const double nb = hb_norm_sq(pair, f);
        const double rel = nb == 0.0 ? 0.0 : std::abs(nb - dm_norm(f, lambda, m)) / nb;
        if (rel > worst || worst_i < 0) {
          worst = rel;
          worst_i = i;
          worst_f = f;
        }
      }
      Instance& in = b.add("norm equality m=" + std::to_string(m) + " lambda=" +
                           std::to_string(lambda.angle() / kTwoPi) + " turns");
      in.inputs = {{"m", m}, {"lambda", to_json(lambda)}, {"count", o.instances}, {"seed", o.seed},
                   {"worst_index", worst_i}, {"worst_f", to_json(worst_f)}};
      in.residuals = {{"max_relative", worst}};
      in.thresholds = {{"max_relative", tol}};
      in.pass = worst <= tol;
    }
  }

  // Closed-form against coefficient Toeplitz action, and the m = 1 semigroup.
  Rng trng(o.seed, stream_id("dm-norm/toeplitz"));
  double worst = 0.0, semigroup = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int m = 1 + i % 4;
    const UnimodularPoint lambda = trng.point();
    const Polynomial f = trng.poly(30);
    const std::vector<UnimodularPoint> ls(static_cast<std::size_t>(m), lambda);
    const RationalFunction phi(Polynomial::monomial(m, ipow(lambda.conj(), m)), boundary_factor(ls));
    const Polynomial a = toeplitz_conj_closed(lambda, m, f);
    const Polynomial c = toeplitz_conj_coeff(phi, f);
    const double scale = std::max(f.norm(), 1e-300);
    worst = std::max(worst, max_coeff_distance(a, c) / scale);
    if (m == 2)
      semigroup = std::max(semigroup, max_coeff_distance(toeplitz_conj_closed(lambda, 1, toeplitz_conj_closed(lambda, 1, f)), a) / scale);
  }
  Instance& in = b.add("toeplitz closed form vs coefficients");
  in.inputs = {{"seed", o.seed}, {"count", 50}, {"m_max", 4}, {"max_degree", 30}};
  in.residuals = {{"max_relative", worst}, {"semigroup_relative", semigroup}};
  in.thresholds = {{"max_relative", 1e-10}, {"semigroup_relative", 1e-10}};
  in.pass = worst <= 1e-10 && semigroup <= 1e-10;
}

// ---------------------------------------------------------------------------

using SuiteFn = void (*)(const Options&, Builder&);

struct Entry {
  const char* name;
  SuiteFn fn;
};

constexpr Entry kSuites[] = {
    {"lemma1", lemma1_suite},       {"isometry", isometry_suite},   {"theorem1", theorem1_suite},
    {"prop4", prop4_suite},         {"fejer-riesz", fejer_riesz_suite}, {"wandering", wandering_suite},
    {"dm-norm", dm_norm_suite},
};

}  // namespace

nlohmann::json Report::to_json() const {
  json in = json::array();
  for (const Instance& i : instances)
    in.push_back({{"suite", i.suite}, {"name", i.name}, {"inputs", i.inputs}, {"residuals", i.residuals},
                  {"thresholds", i.thresholds}, {"pass", i.pass}});
  json out = summary;
  out["suite"] = suite;
  out["instances"] = in;
  out["overall_pass"] = overall_pass;
  out["wall_time"] = wall_time;
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const Entry& e : kSuites) n.emplace_back(e.name);
    n.emplace_back("all");
    return n;
  }();
  return names;
}

Report run(const std::string& suite, const Options& options) {
  if (options.instances < 0 || options.max_degree < 0 || options.max_m < 1)
    throw InvalidArgument("suite options: instances, degree and m bounds must be nonnegative");
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.suite = suite;
  bool found = false;
  for (const Entry& e : kSuites) {
    if (suite != "all" && suite != e.name) continue;
    found = true;
    Builder b(e.name, r);
    e.fn(options, b);
  }
  if (!found) throw InvalidArgument("unknown suite: " + suite);
  r.overall_pass = std::all_of(r.instances.begin(), r.instances.end(), [](const Instance& i) { return i.pass; });
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace hblab::suites
