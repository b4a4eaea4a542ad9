// SPDX-License-Identifier: Apache-2.0

#include "hblab/hardy.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "hblab/error.hpp"
#include "hblab/kernels.hpp"

namespace hblab {

namespace {

constexpr int kInitialSeriesTerms = 64;

std::vector<Complex> phi_taylor(const CanonicalPair& pair, int n) {
  return taylor_coeffs(pair.phi(), std::max(n, 0));
}

// Largest index with a nonzero coefficient, i.e. the degree of a polynomial
// side of an inner product. Requires f.is_polynomial().
int polynomial_degree(const RationalFunction& f) { return f.num().degree() - std::max(f.den().degree(), 0); }

}  // namespace

Complex h2_inner(const Polynomial& f, const Polynomial& g) { return kernels::cdot(f.coeffs(), g.coeffs()); }

long max_series_terms() {
  const char* env = std::getenv("HBLAB_MAX_SERIES_TERMS");
  if (env == nullptr || *env == '\0') return kDefaultMaxSeriesTerms;
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(env, &end, 10);
  if (errno != 0 || *end != '\0' || v <= 0)
    throw InvalidArgument("HBLAB_MAX_SERIES_TERMS must be a positive integer");
  return v;
}

Complex h2_inner_rational(const RationalFunction& f, const RationalFunction& g, double tol) {
  if (f.pole_class() != PoleClass::OutsideClosedDisk || g.pole_class() != PoleClass::OutsideClosedDisk)
    throw InvalidArgument("h2_inner_rational: poles must lie outside the closed unit disk");
  if (!(tol > 0.0)) throw InvalidArgument("h2_inner_rational: tolerance must be positive");

  if (f.is_polynomial() || g.is_polynomial()) {
    int n = std::numeric_limits<int>::max();
    if (f.is_polynomial()) n = std::min(n, polynomial_degree(f));
    if (g.is_polynomial()) n = std::min(n, polynomial_degree(g));
    if (n < 0) return {};
    const std::vector<Complex> fc = taylor_coeffs(f, n);
    const std::vector<Complex> gc = taylor_coeffs(g, n);
    return kernels::cdot(fc, gc);
  }

  // Coefficients decay like k^d (rho_f rho_g)^(-k); the square root of that
  // ratio dominates every polynomial factor.
  const double q = 1.0 / std::sqrt(f.min_pole_modulus() * g.min_pole_modulus());
  const long cap = max_series_terms();
  long K = std::min<long>(kInitialSeriesTerms, cap);
  while (true) {
    const int n = static_cast<int>(K);
    const std::vector<Complex> fc = taylor_coeffs(f, n);
    const std::vector<Complex> gc = taylor_coeffs(g, n);
    double c = 0.0;
    for (int k = n / 2; k <= n; ++k)
      c = std::max(c, std::abs(fc[static_cast<std::size_t>(k)] * gc[static_cast<std::size_t>(k)]) * std::pow(q, -k));
    const double tail = c * std::pow(q, n + 1) / (1.0 - q);
    if (tail < tol) return kernels::cdot(fc, gc);
    if (K >= cap)
      throw NumericalError("h2_inner_rational: tail bound not reached within the series term cap");
    K = std::min(2 * K, cap);
  }
}

Polynomial toeplitz_conj_coeff(std::span<const Complex> phi_hat, const Polynomial& f) {
  const int d = f.degree();
  if (d < 0) return {};
  if (phi_hat.size() < static_cast<std::size_t>(d + 1))
    throw InvalidArgument("toeplitz_conj_coeff: too few Taylor coefficients of the symbol");
  const std::span<const Complex> fc = f.coeffs();
  std::vector<Complex> out(static_cast<std::size_t>(d + 1));
  for (int j = 0; j <= d; ++j) {
    const std::size_t len = static_cast<std::size_t>(d - j + 1);
    out[static_cast<std::size_t>(j)] = kernels::cdot(fc.subspan(static_cast<std::size_t>(j), len), phi_hat.first(len));
  }
  return Polynomial(std::move(out));
}

Polynomial toeplitz_conj_coeff(const RationalFunction& phi, const Polynomial& f) {
  if (f.is_zero()) return {};
  return toeplitz_conj_coeff(taylor_coeffs(phi, f.degree()), f);
}

Polynomial toeplitz_conj_closed(UnimodularPoint lambda, int m, const Polynomial& f) {
  if (m < 1) throw InvalidArgument("toeplitz_conj_closed: m must be positive");
  if (f.degree() < m) return {};
  return ipow(lambda.value(), m) * taylor_split(f, lambda.value(), m).quotient;
}

RationalFunction toeplitz_conj_on_a_multiple(const CanonicalPair& pair, const RationalFunction& F) {
  const int m = pair.m();
  if (pair.p.degree() > m)
    throw InvalidArgument("toeplitz_conj_on_a_multiple: numerator degree exceeds the number of boundary zeros");
  const Complex sigma = (m % 2 == 0 ? 1.0 : -1.0) * std::conj(pair.lambda_product());
  Polynomial num = sigma * (reflect(pair.p, m) * F.num());
  return RationalFunction(std::move(num), F.den() * pair.r);
}

RationalFunction toeplitz_conj_on_a_multiple(const CanonicalPair& pair, const Polynomial& f) {
  return toeplitz_conj_on_a_multiple(pair, RationalFunction::from_polynomial(f));
}

Complex hb_inner(const CanonicalPair& pair, const Polynomial& f, const Polynomial& g) {
  const std::vector<Complex> phi = phi_taylor(pair, std::max(f.degree(), g.degree()));
  return h2_inner(f, g) + h2_inner(toeplitz_conj_coeff(phi, f), toeplitz_conj_coeff(phi, g));
}

double hb_norm_sq(const CanonicalPair& pair, const Polynomial& f) { return hb_inner(pair, f, f).real(); }

double hb_norm_sq_a_multiple(const CanonicalPair& pair, const Polynomial& f, double tol) {
  const RationalFunction af = f * pair.a;
  const RationalFunction t = toeplitz_conj_on_a_multiple(pair, f);
  return h2_inner_rational(af, af, tol).real() + h2_inner_rational(t, t, tol).real();
}

double GramMatrix::hermitian_residual() const { return (entries - entries.adjoint()).cwiseAbs().maxCoeff(); }

double GramMatrix::max_abs() const { return entries.cwiseAbs().maxCoeff(); }

bool GramMatrix::positive_definite() const {
  const Eigen::MatrixXcd h = 0.5 * (entries + entries.adjoint());
  Eigen::LLT<Eigen::MatrixXcd> llt(h);
  return llt.info() == Eigen::Success;
}

double GramMatrix::min_eigenvalue() const {
  const Eigen::MatrixXcd h = 0.5 * (entries + entries.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

GramMatrix hb_gram(const CanonicalPair& pair, int N) {
  if (N < 0) throw InvalidArgument("hb_gram: N must be nonnegative");
  const std::vector<Complex> phi = phi_taylor(pair, N);
  std::vector<Polynomial> t;
  t.reserve(static_cast<std::size_t>(N + 1));
  for (int i = 0; i <= N; ++i) t.push_back(toeplitz_conj_coeff(phi, Polynomial::monomial(i)));

  GramMatrix g;
  g.N = N;
  g.entries.resize(N + 1, N + 1);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j)
      g.entries(i, j) = (i == j ? 1.0 : 0.0) + h2_inner(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]);
  return g;
}

double reproducing_check(const CanonicalPair& pair, const Polynomial& f, Complex w, int N) {
  if (!(std::abs(w) <= 0.9)) throw InvalidArgument("reproducing_check: |w| must not exceed 0.9");
  if (N < 0) throw InvalidArgument("reproducing_check: N must be nonnegative");
  // k_w(z) = (1 - conj(b(w)) b(z)) * sum_k (conj(w) z)^k
  const std::vector<Complex> bh = taylor_coeffs(pair.b, N);
  const Complex cb = std::conj(pair.b(w));
  const Complex wc = std::conj(w);
  std::vector<Complex> k(static_cast<std::size_t>(N + 1));
  Complex acc{};
  for (int n = 0; n <= N; ++n) {
    const Complex t = (n == 0 ? 1.0 : 0.0) - cb * bh[static_cast<std::size_t>(n)];
    acc = acc * wc + t;
    k[static_cast<std::size_t>(n)] = acc;
  }
  return std::abs(hb_inner(pair, f, Polynomial(std::move(k))) - f(w));
}

double prop4_residual(const CanonicalPair& pair, const Polynomial& q, const Polynomial& f) {
  const double nb = hb_norm_sq(pair, f);
  if (nb == 0.0) return 0.0;
  const RationalFunction phi_m(Polynomial::monomial(pair.m()), pair.boundary_factor());
  const Polynomial t = toeplitz_conj_coeff(phi_m, q * f);
  const double rhs = f.norm() * f.norm() + t.norm() * t.norm();
  return std::abs(nb - rhs) / nb;
}

GramRatio gram_ratio(const GramMatrix& g1, const GramMatrix& g2) {
  if (g1.entries.rows() != g2.entries.rows())
    throw InvalidArgument("gram_ratio: Gram matrices differ in size");
  const Eigen::MatrixXcd a = 0.5 * (g1.entries + g1.entries.adjoint());
  const Eigen::MatrixXcd b = 0.5 * (g2.entries + g2.entries.adjoint());
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, b, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("gram_ratio: second Gram matrix is not positive definite");
  return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

}  // namespace hblab
