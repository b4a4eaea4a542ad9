// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "hblab/polynomial.hpp"
#include "hblab/rational.hpp"

namespace hblab {

/// A rational pair (b, a) with a outer, a(0) > 0 and |a|^2 + |b|^2 = 1 on the
/// circle, stored together with its generators:
///   b = p / r,  a = prod_j (1 - conj(lambda_j) z) / r,
/// so that b / a = p / prod_j (1 - conj(lambda_j) z).
struct CanonicalPair {
  RationalFunction b;
  RationalFunction a;
  std::vector<UnimodularPoint> lambdas;
  Polynomial p;
  Polynomial r;

  int m() const noexcept { return static_cast<int>(lambdas.size()); }
  /// prod_j (1 - conj(lambda_j) z), the numerator of a.
  Polynomial boundary_factor() const { return hblab::boundary_factor(lambdas); }
  /// phi = b/a in its unreduced form p / prod_j (1 - conj(lambda_j) z).
  RationalFunction phi() const;
  /// lambda_1 * ... * lambda_m
  Complex lambda_product() const noexcept;
};

/// Assembles b and a from generators. No invariant checks beyond those of
/// RationalFunction; see `check_pair`.
CanonicalPair assemble_pair(Polynomial p, Polynomial r, std::vector<UnimodularPoint> lambdas);

struct PairCheck {
  double identity_residual = 0.0;  // max | |a|^2 + |b|^2 - 1 | over samples
  double sup_b = 0.0;              // max |b| over samples
  double a0 = 0.0;                 // Re a(0)
  double a0_imag = 0.0;
  double min_r_root_modulus = 0.0;  // +inf for constant r
};

PairCheck check_pair(const CanonicalPair& pair, int samples = 1024);

/// The pair of phi = p / prod_j (1 - conj(lambda_j) z). Requires p != 0 and
/// |p(lambda_j)| > 1e-10 * max|p_k| for every j.
CanonicalPair pair_from_phi(const Polynomial& p, std::span<const UnimodularPoint> lambdas);

/// The m-th roots of 1 (m odd) or of -1 (m even), sorted by ascending angle in
/// (-pi, pi].
std::vector<UnimodularPoint> koebe_targets(int m);

/// Explicit pair of phi = (conj(lambda) z)^m / (1 - conj(lambda) z)^m built
/// from Koebe preimages z_k of `koebe_targets(m)`:
///   r(z) = prod_k (1 - conj(lambda) z_k z) / C_m,  C_m = prod_k (1 - z_k).
CanonicalPair prop3_pair(UnimodularPoint lambda, int m);

/// Closed form for m = 1 with alpha = (3 - sqrt 5)/2:
///   b = (1 - alpha) conj(lambda) z / (1 - alpha conj(lambda) z).
CanonicalPair sarason_pair(UnimodularPoint lambda);

inline constexpr double kSarasonAlpha = 0.38196601125010515179541316563436188227969082019424;

/// Max coefficient distance between prop3_pair(lambda, m) and the pair built
/// by spectral factorization from the same phi.
double prop3_crosscheck(UnimodularPoint lambda, int m);

/// Reproducing kernel (1 - conj(b(w)) b(z)) / (1 - conj(w) z); |w|, |z| < 1.
Complex kernel_eval(const CanonicalPair& pair, Complex w, Complex z);

}  // namespace hblab
