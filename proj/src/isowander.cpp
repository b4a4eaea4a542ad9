// SPDX-License-Identifier: Apache-2.0

#include "hblab/isowander.hpp"

#include <algorithm>
#include <cmath>

#include "hblab/error.hpp"

namespace hblab {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double max_or_zero(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); }

RationalFunction times_monomial(int k, const RationalFunction& f) {
  return RationalFunction(Polynomial::monomial(k) * f.num(), f.den());
}

}  // namespace

DefectMatrix defect_matrix(const GramMatrix& gram, int n, int N) {
  if (n < 1 || N < 0) throw InvalidArgument("defect_matrix: need n >= 1 and N >= 0");
  if (gram.N < N + n) throw InvalidArgument("defect_matrix: Gram matrix too small");
  DefectMatrix d;
  d.n = n;
  d.N = N;
  d.entries = Eigen::MatrixXcd::Zero(N + 1, N + 1);
  for (int k = 0; k <= n; ++k) {
    const double c = ((n - k) % 2 == 0 ? 1.0 : -1.0) * binomial(n, k);
    d.entries += c * gram.entries.block(k, k, N + 1, N + 1);
  }
  return d;
}

DefectMatrix defect_matrix(const CanonicalPair& pair, int n, int N) {
  if (n < 1 || N < 0) throw InvalidArgument("defect_matrix: need n >= 1 and N >= 0");
  return defect_matrix(hb_gram(pair, N + n), n, N);
}

double pascal_residual(const CanonicalPair& pair, int n, int N) {
  const GramMatrix g = hb_gram(pair, N + n + 1);
  const DefectMatrix lo = defect_matrix(g, n, N + 1);
  const DefectMatrix hi = defect_matrix(g, n + 1, N);
  const Eigen::MatrixXcd diff =
      hi.entries - lo.entries.block(1, 1, N + 1, N + 1) + lo.entries.block(0, 0, N + 1, N + 1);
  return diff.cwiseAbs().maxCoeff() / g.max_abs();
}

IsometryVerdict strict_2m_check(const CanonicalPair& pair, int m, int N, double tol) {
  if (m < 1) throw InvalidArgument("strict_2m_check: m must be positive");
  const GramMatrix g = hb_gram(pair, N + 2 * m);
  IsometryVerdict v;
  v.max_defect_2m = defect_matrix(g, 2 * m, N).max_abs();
  v.max_defect_2m_minus_1 = defect_matrix(g, 2 * m - 1, N).max_abs();
  v.is_2m_isometry = v.max_defect_2m < tol;
  if (pair.p[0] == Complex{}) v.is_strict = v.is_2m_isometry && v.max_defect_2m_minus_1 > 1e3 * tol;
  return v;
}

WPolynomial w_polynomial(std::span<const UnimodularPoint> lambdas, const Polynomial& p) {
  if (p.is_zero()) throw InvalidArgument("w_polynomial: p is identically zero");
  for (const UnimodularPoint& l : lambdas)
    if (std::abs(p(l.value())) <= 1e-10 * p.max_abs())
      throw InvalidArgument("w_polynomial: p vanishes at a boundary point lambda_j");
  const TrigPolynomial v = TrigPolynomial::abs_squared(boundary_factor(lambdas)) + TrigPolynomial::abs_squared(p);
  SymmetricSplit s = split_symmetric(v);
  return WPolynomial{std::move(s.w), s.bandwidth, s.c, std::move(s.outside), std::move(s.roots)};
}

double W_identity_check(std::span<const UnimodularPoint> lambdas, const Polynomial& p, int samples) {
  const int m = static_cast<int>(lambdas.size());
  if (p.degree() > m) throw InvalidArgument("W_identity_check: deg p exceeds m");
  const WPolynomial wp = w_polynomial(lambdas, p);
  Complex lam{1.0, 0.0};
  for (const UnimodularPoint& l : lambdas) lam *= l.value();
  const Complex sign = (m % 2 == 0 ? 1.0 : -1.0) * std::conj(lam);
  const Polynomial q = boundary_factor(lambdas);
  const Polynomial W = q * q + sign * (p * reflect(p, m));
  const Polynomial rhs = sign * (Polynomial::monomial(m - wp.m0) * wp.w);
  double res = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Complex z = std::polar(1.0, kTwoPi * k / samples);
    res = std::max(res, std::abs(W(z) - rhs(z)));
  }
  return res;
}

BlaschkeProduct extract_Bm(std::span<const UnimodularPoint> lambdas, const Polynomial& p) {
  const WPolynomial wp = w_polynomial(lambdas, p);
  std::vector<Complex> zeros;
  for (const Complex& w : wp.outside_roots) zeros.push_back(1.0 / std::conj(w));
  return BlaschkeProduct(std::move(zeros), static_cast<int>(lambdas.size()) - wp.m0);
}

std::vector<double> wandering_residuals(const CanonicalPair& pair, const BlaschkeProduct& u, int K, double tol) {
  if (K < 0) throw InvalidArgument("wandering_residuals: K must be nonnegative");
  const RationalFunction ur = u.as_rational();
  const RationalFunction h = ur * pair.a;
  const RationalFunction t = toeplitz_conj_on_a_multiple(pair, ur);
  std::vector<double> out;
  for (int k = 0; k <= K; ++k) {
    const Complex v =
        h2_inner_rational(times_monomial(k + 1, h), h, tol) + h2_inner_rational(times_monomial(k + 1, t), t, tol);
    out.push_back(std::abs(v));
  }
  return out;
}

std::vector<double> membership_residuals(const RationalFunction& h0, const BlaschkeProduct& B, int J, double tol) {
  if (J < 0) throw InvalidArgument("membership_residuals: J must be nonnegative");
  const RationalFunction b = B.as_rational();
  std::vector<double> out;
  for (int j = 0; j <= J; ++j) out.push_back(std::abs(h2_inner_rational(h0, times_monomial(j + 1, b), tol)));
  return out;
}

bool WanderingCertificate::pass() const {
  return max_or_zero(orthogonality_residuals) <= orthogonality_tol &&
         max_or_zero(membership_residuals) <= membership_tol;
}

WanderingCertificate wandering_check(const CanonicalPair& pair, const BlaschkeProduct& u, int K, int J,
                                     double orthogonality_tol, double membership_tol) {
  WanderingCertificate c;
  c.u = u;
  c.B_m = extract_Bm(pair.lambdas, pair.p);
  c.orthogonality_tol = orthogonality_tol;
  c.membership_tol = membership_tol;
  c.orthogonality_residuals = wandering_residuals(pair, u, K);

  const RationalFunction ur = u.as_rational();
  const RationalFunction h = ur * pair.a;
  const RationalFunction t = toeplitz_conj_on_a_multiple(pair, ur);
  c.hb_norm_sq = h2_inner_rational(h, h).real() + h2_inner_rational(t, t).real();

  // The outer part of u a is a.
  c.membership_residuals = membership_residuals(pair.a, c.B_m, J);
  return c;
}

}  // namespace hblab
