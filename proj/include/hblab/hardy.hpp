// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hblab/pairs.hpp"
#include "hblab/polynomial.hpp"
#include "hblab/rational.hpp"

namespace hblab {

/// sum_k f_k conj(g_k)
Complex h2_inner(const Polynomial& f, const Polynomial& g);

inline constexpr double kDefaultSeriesTol = 1e-12;
inline constexpr long kDefaultMaxSeriesTerms = 1000000;

/// Truncation cap for rational inner products: HBLAB_MAX_SERIES_TERMS when set
/// to a positive integer, otherwise kDefaultMaxSeriesTerms.
long max_series_terms();

/// sum_k fhat_k conj(ghat_k) for f, g with all poles outside the closed disk.
///
/// A polynomial side makes the sum finite. Otherwise K doubles from 64 until
/// the geometric tail estimate C q^(K+1) / (1 - q) drops below tol, where
/// q = (rho_f rho_g)^(-1/2) from the smallest pole moduli and C is the largest
/// |fhat_k ghat_k| / q^k over k in [K/2, K]. Throws InvalidArgument for poles
/// on or inside the circle and NumericalError when K would exceed
/// max_series_terms().
Complex h2_inner_rational(const RationalFunction& f, const RationalFunction& g,
                          double tol = kDefaultSeriesTol);

/// T_{conj phi} f from the Taylor coefficients of phi: output coefficient j is
/// sum_{i=j}^{deg f} f_i conj(phihat_{i-j}). `phi_hat` needs deg f + 1 entries.
Polynomial toeplitz_conj_coeff(std::span<const Complex> phi_hat, const Polynomial& f);
Polynomial toeplitz_conj_coeff(const RationalFunction& phi, const Polynomial& f);

/// T_{conj phi} f for phi = (conj(lambda) z)^m / (1 - conj(lambda) z)^m:
///   lambda^m (f - T_{m-1}(f, lambda)) / (z - lambda)^m.
/// The quotient comes straight from synthetic division at lambda.
Polynomial toeplitz_conj_closed(UnimodularPoint lambda, int m, const Polynomial& f);

/// T_{conj phi}(a f) = sigma * ptilde * f / r with ptilde = reflect(p, m) and
/// sigma = (-1)^m conj(lambda_1 ... lambda_m). Requires deg p <= m.
RationalFunction toeplitz_conj_on_a_multiple(const CanonicalPair& pair, const Polynomial& f);
/// The same for a rational F with poles outside the closed disk.
RationalFunction toeplitz_conj_on_a_multiple(const CanonicalPair& pair, const RationalFunction& F);

/// <f, g>_b = <f, g>_2 + <T_{conj phi} f, T_{conj phi} g>_2
Complex hb_inner(const CanonicalPair& pair, const Polynomial& f, const Polynomial& g);
double hb_norm_sq(const CanonicalPair& pair, const Polynomial& f);

/// ||a f||_b^2 computed as ||a f||_2^2 + ||T_{conj phi}(a f)||_2^2 by series.
double hb_norm_sq_a_multiple(const CanonicalPair& pair, const Polynomial& f,
                             double tol = kDefaultSeriesTol);

/// Gram matrix <z^i, z^j>_b, 0 <= i, j <= N.
struct GramMatrix {
  int N = 0;
  Eigen::MatrixXcd entries;

  /// max |G - G*|; both triangles are computed independently.
  double hermitian_residual() const;
  double max_abs() const;
  /// Cholesky succeeds on the Hermitian part.
  bool positive_definite() const;
  double min_eigenvalue() const;
};

GramMatrix hb_gram(const CanonicalPair& pair, int N);

/// |<f, P_N k_w>_b - f(w)| where P_N k_w is the degree-N Taylor truncation of
/// the reproducing kernel at w. Requires |w| <= 0.9.
double reproducing_check(const CanonicalPair& pair, const Polynomial& f, Complex w, int N);

/// Relative defect | ||f||_b^2 - ||f||_2^2 - ||T_{conj phi_m}(q f)||_2^2 | / ||f||_b^2
/// with phi_m = z^m / prod_j (1 - conj(lambda_j) z). Zero for q = reflect(p, m)
/// up to a unimodular constant.
double prop4_residual(const CanonicalPair& pair, const Polynomial& q, const Polynomial& f);

/// Extreme generalized eigenvalues of G1 x = mu G2 x for Hermitian positive
/// definite Grams of equal size.
struct GramRatio {
  double min = 0.0;
  double max = 0.0;
};
GramRatio gram_ratio(const GramMatrix& g1, const GramMatrix& g2);

}  // namespace hblab
