// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hblab/factor.hpp"
#include "hblab/hardy.hpp"
#include "hblab/pairs.hpp"

namespace hblab {

/// Delta_n(i, j) = sum_{k=0}^{n} (-1)^(n-k) C(n, k) <z^(i+k), z^(j+k)>_b for
/// 0 <= i, j <= N: the form of sum (-1)^(n-k) C(n, k) Y*^k Y^k on monomials.
struct DefectMatrix {
  int n = 0;
  int N = 0;
  Eigen::MatrixXcd entries;

  double max_abs() const { return entries.cwiseAbs().maxCoeff(); }
  double hermitian_residual() const { return (entries - entries.adjoint()).cwiseAbs().maxCoeff(); }
};

DefectMatrix defect_matrix(const CanonicalPair& pair, int n, int N);
/// The same from an existing Gram matrix; requires gram.N >= N + n.
DefectMatrix defect_matrix(const GramMatrix& gram, int n, int N);

/// max |Delta_{n+1}(i, j) - Delta_n(i+1, j+1) + Delta_n(i, j)| over 0 <= i, j <= N,
/// divided by the largest modulus among the Gram entries involved.
double pascal_residual(const CanonicalPair& pair, int n, int N);

struct IsometryVerdict {
  bool is_2m_isometry = false;
  /// Empty when b(0) != 0: strictness is only claimed for b(0) = 0.
  std::optional<bool> is_strict;
  double max_defect_2m = 0.0;
  double max_defect_2m_minus_1 = 0.0;
};

/// is_2m_isometry iff max |Delta_2m| < tol; is_strict iff additionally
/// max |Delta_{2m-1}| > 1e3 tol.
IsometryVerdict strict_2m_check(const CanonicalPair& pair, int m, int N, double tol);

struct WPolynomial {
  Polynomial w;  // z^m0 v(z)
  int m0 = 0;
  double c = 0.0;
  std::vector<Complex> outside_roots;  // w_k, |w_k| > 1
  RootSet roots;
};

/// v = |prod_j (1 - conj(lambda_j) z)|^2 + |p|^2 and its symmetric root split.
/// Requires p(lambda_j) != 0.
WPolynomial w_polynomial(std::span<const UnimodularPoint> lambdas, const Polynomial& p);

/// max over circle samples of
///   | prod (1 - conj(lambda_j) z)^2 + (-1)^m conj(L) p ptilde
///     - (-1)^m conj(L) z^(m - m0) w(z) |,  L = prod lambda_j.
/// Requires deg p <= m.
double W_identity_check(std::span<const UnimodularPoint> lambdas, const Polynomial& p, int samples = 1024);

/// z^(m - m0) prod_k (z - z_k) / (1 - conj(z_k) z) with z_k = 1 / conj(w_k).
BlaschkeProduct extract_Bm(std::span<const UnimodularPoint> lambdas, const Polynomial& p);

/// |<Y^(k+1) (u a), u a>_b| for k = 0..K, each computed as
///   <z^(k+1) u a, u a>_2 + <z^(k+1) t, t>_2,  t = T_{conj phi}(u a).
std::vector<double> wandering_residuals(const CanonicalPair& pair, const BlaschkeProduct& u, int K,
                                        double tol = kDefaultSeriesTol);

/// |<h0, z^(j+1) B>_2| for j = 0..J.
std::vector<double> membership_residuals(const RationalFunction& h0, const BlaschkeProduct& B, int J,
                                         double tol = kDefaultSeriesTol);

/// Everything needed to re-derive the wandering claims for h = u a.
struct WanderingCertificate {
  BlaschkeProduct u;
  BlaschkeProduct B_m;
  double hb_norm_sq = 0.0;  // ||u a||_b^2, equal to ||u||_2^2 = 1
  std::vector<double> orthogonality_residuals;
  std::vector<double> membership_residuals;  // of the outer part a
  double orthogonality_tol = 0.0;
  double membership_tol = 0.0;

  bool pass() const;
};

WanderingCertificate wandering_check(const CanonicalPair& pair, const BlaschkeProduct& u, int K, int J,
                                     double orthogonality_tol, double membership_tol);

}  // namespace hblab
