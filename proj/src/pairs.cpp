// SPDX-License-Identifier: Apache-2.0

#include "hblab/pairs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hblab/error.hpp"
#include "hblab/factor.hpp"
#include "hblab/kernels.hpp"
#include "hblab/roots.hpp"

namespace hblab {

RationalFunction CanonicalPair::phi() const { return RationalFunction(p, boundary_factor()); }

Complex CanonicalPair::lambda_product() const noexcept {
  Complex l{1.0, 0.0};
  for (const UnimodularPoint& x : lambdas) l *= x.value();
  return l;
}

CanonicalPair assemble_pair(Polynomial p, Polynomial r, std::vector<UnimodularPoint> lambdas) {
  RationalFunction b(p, r);
  RationalFunction a(boundary_factor(lambdas), r);
  return CanonicalPair{std::move(b), std::move(a), std::move(lambdas), std::move(p), std::move(r)};
}

PairCheck check_pair(const CanonicalPair& pair, int samples) {
  std::vector<Complex> pts(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) pts[static_cast<std::size_t>(k)] = std::polar(1.0, kTwoPi * k / samples);
  std::vector<Complex> pv(pts.size()), qv(pts.size()), rv(pts.size());
  kernels::horner_batch(pair.p.coeffs(), pts, pv);
  kernels::horner_batch(pair.boundary_factor().coeffs(), pts, qv);
  kernels::horner_batch(pair.r.coeffs(), pts, rv);

  PairCheck out;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const double r2 = std::norm(rv[k]);
    const double b2 = std::norm(pv[k]) / r2;
    const double a2 = std::norm(qv[k]) / r2;
    out.identity_residual = std::max(out.identity_residual, std::abs(a2 + b2 - 1.0));
    out.sup_b = std::max(out.sup_b, std::sqrt(b2));
  }
  const Complex a0 = pair.a(0.0);
  out.a0 = a0.real();
  out.a0_imag = a0.imag();
  out.min_r_root_modulus = std::numeric_limits<double>::infinity();
  if (pair.r.degree() >= 1)
    for (const Complex& z : find_roots(pair.r).roots)
      out.min_r_root_modulus = std::min(out.min_r_root_modulus, std::abs(z));
  return out;
}

CanonicalPair pair_from_phi(const Polynomial& p, std::span<const UnimodularPoint> lambdas) {
  if (p.is_zero()) throw InvalidArgument("pair_from_phi: p is identically zero");
  const double scale = p.max_abs();
  for (const UnimodularPoint& l : lambdas)
    if (std::abs(p(l.value())) <= 1e-10 * scale)
      throw InvalidArgument("pair_from_phi: p vanishes at a boundary point lambda_j");

  std::vector<UnimodularPoint> ls(lambdas.begin(), lambdas.end());
  const TrigPolynomial v = TrigPolynomial::abs_squared(boundary_factor(ls)) + TrigPolynomial::abs_squared(p);
  Polynomial r = fejer_riesz(v);
  return assemble_pair(p, std::move(r), std::move(ls));
}

std::vector<UnimodularPoint> koebe_targets(int m) {
  if (m < 1) throw InvalidArgument("koebe_targets: m must be positive");
  std::vector<double> angles;
  for (int k = 0; k < m; ++k) {
    // m odd: 2 pi k / m; m even: pi (2k + 1) / m. Reduced to (-pi, pi].
    double a = (m % 2 == 1 ? 2.0 * k : 2.0 * k + 1.0) * std::numbers::pi / m;
    if (a > std::numbers::pi) a -= kTwoPi;
    angles.push_back(a);
  }
  std::sort(angles.begin(), angles.end());
  std::vector<UnimodularPoint> out;
  for (double a : angles) out.emplace_back(std::polar(1.0, a));
  return out;
}

CanonicalPair prop3_pair(UnimodularPoint lambda, int m) {
  if (m < 1) throw InvalidArgument("prop3_pair: m must be positive");
  const Complex lc = lambda.conj();
  Polynomial den = Polynomial::constant(1.0);
  Complex cm{1.0, 0.0};
  for (const UnimodularPoint& e : koebe_targets(m)) {
    const Complex z = koebe_preimage(e);
    cm *= 1.0 - z;
    den = den * Polynomial{1.0, -lc * z};
  }
  Polynomial r = (1.0 / cm) * den;
  Polynomial p = Polynomial::monomial(m, ipow(lc, m));
  std::vector<UnimodularPoint> ls(static_cast<std::size_t>(m), lambda);

#ifndef NDEBUG
  {
    const TrigPolynomial v = TrigPolynomial::abs_squared(boundary_factor(ls)) + TrigPolynomial::abs_squared(p);
    if (max_coeff_distance(fejer_riesz(v), r) > 1e-9 * std::max(1.0, r.max_abs()))
      throw NumericalError("prop3_pair: Koebe construction disagrees with spectral factorization");
  }
#endif
  return assemble_pair(std::move(p), std::move(r), std::move(ls));
}

CanonicalPair sarason_pair(UnimodularPoint lambda) {
  const double alpha = kSarasonAlpha;
  const Complex lc = lambda.conj();
  Polynomial p{0.0, lc};
  Polynomial r = (1.0 / (1.0 - alpha)) * Polynomial{1.0, -alpha * lc};
  return assemble_pair(std::move(p), std::move(r), {lambda});
}

double prop3_crosscheck(UnimodularPoint lambda, int m) {
  const CanonicalPair explicit_pair = prop3_pair(lambda, m);
  const std::vector<UnimodularPoint> ls(static_cast<std::size_t>(m), lambda);
  const CanonicalPair factored = pair_from_phi(explicit_pair.p, ls);
  return std::max({max_coeff_distance(explicit_pair.r, factored.r),
                   max_coeff_distance(explicit_pair.p, factored.p),
                   max_coeff_distance(explicit_pair.a.num(), factored.a.num()),
                   max_coeff_distance(explicit_pair.b.den(), factored.b.den())});
}

Complex kernel_eval(const CanonicalPair& pair, Complex w, Complex z) {
  if (!(std::abs(w) < 1.0) || !(std::abs(z) < 1.0))
    throw InvalidArgument("kernel_eval: points must lie in the open unit disk");
  const Complex bw = pair.b(w);
  const Complex bz = pair.b(z);
  const Complex k = (1.0 - std::conj(bw) * bz) / (1.0 - std::conj(w) * z);
  if (z == w) return {k.real(), 0.0};
  return k;
}

}  // namespace hblab
