// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hblab/polynomial.hpp"
#include "hblab/rational.hpp"

namespace hblab {

/// f = section + (z - lambda)^m g with deg section < m.
struct DirichletDecomposition {
  Polynomial section;
  Polynomial g;
  UnimodularPoint lambda{1.0};
  int m = 1;

  /// max coefficient distance between f and section + (z - lambda)^m g
  double reconstruction_residual(const Polynomial& f) const;
};

DirichletDecomposition decompose(const Polynomial& f, UnimodularPoint lambda, int m);

/// D^m_lambda(f) = ||g||_2^2
double dirichlet_m(const Polynomial& f, UnimodularPoint lambda, int m);

/// ||f||_2^2 + D^m_lambda(f)
double dm_norm(const Polynomial& f, UnimodularPoint lambda, int m);

/// ||z^k||^2 in the weighted Bergman space with weight (1 - |z|^2)^(2m-1) and
/// normalized area measure: B(k + 1, 2m) = k! (2m-1)! / (k + 2m)!.
struct BergmanMoment {
  int k = 0;
  int m = 1;
  double value = 0.0;
};

BergmanMoment bergman_moment(int k, int m);

inline constexpr double kDefaultA2Tol = 1e-8;

/// int_D |h|^2 (1 - |z|^2)^(2m-1) dA as sum_k |hhat_k|^2 B(k + 1, 2m).
///
/// h is a polynomial or has all its poles at one boundary point lambda. Past
/// the polynomial part, hhat_k = conj(lambda)^k Q(k) with deg Q < m; Q is
/// interpolated from m coefficients, validated on further ones (relative
/// mismatch at most tol), and the tail is summed in closed form. Throws
/// InvalidArgument when the poles are not a single boundary point or when the
/// validation fails (pole order above m).
double a2_norm_series(const RationalFunction& h, int m, double tol = kDefaultA2Tol);

/// The same integral on a polar grid: Gauss-Legendre in the radius and the
/// trapezoid rule in the angle. When h has a boundary pole the angular
/// variable is graded toward it by a sigmoidal change of variables; nodes are
/// offset by half a step so none falls on the pole.
double a2_norm_quadrature(const RationalFunction& h, int m, int radial_nodes, int angular_nodes);

/// h = f^(m) / (z - lambda)^m with common factors of (z - lambda) cancelled.
RationalFunction theorem1_integrand(const Polynomial& f, UnimodularPoint lambda, int m);

struct Theorem1Result {
  double area_norm = 0.0;  // a2_norm_series of theorem1_integrand
  double scaled_dirichlet = 0.0;  // (2m-1)! D^m_lambda(f)
  double residual = 0.0;  // |area_norm - scaled_dirichlet| / max(1, scaled_dirichlet)
};

Theorem1Result theorem1_check(const Polynomial& f, UnimodularPoint lambda, int m, double tol = kDefaultA2Tol);

}  // namespace hblab
