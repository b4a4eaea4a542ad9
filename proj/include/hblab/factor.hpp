// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "hblab/polynomial.hpp"
#include "hblab/rational.hpp"
#include "hblab/roots.hpp"

namespace hblab {

/// Root structure of w(z) = z^M v(z) for a trigonometric polynomial v that is
/// positive on the circle: w(z) = c prod_j (z - w_j)(1 - conj(w_j) z), c > 0,
/// |w_j| > 1.
struct SymmetricSplit {
  Polynomial w;
  int bandwidth = 0;  // M
  double c = 0.0;
  std::vector<Complex> outside;  // w_j
  std::vector<Complex> inside;   // the partners 1/conj(w_j), same order
  RootSet roots;
};

/// Default number of circle samples for positivity checks.
inline constexpr int kPositivitySamples = 4096;

/// Checks positivity of v at `samples` angles, finds the roots of z^M v(z) and
/// pairs them as {w, 1/conj(w)} (relative tolerance 1e-7).
///
/// Throws FactorizationError: NotPositive when a sample is negative,
/// BoundaryZero when v vanishes on the circle (a sample is zero to rounding
/// or a root lies within 1e-10 of the circle), Unpaired when the root set is
/// not symmetric.
SymmetricSplit split_symmetric(const TrigPolynomial& v, int samples = kPositivitySamples);

/// The outer polynomial r with |r(e^{it})|^2 = v(e^{it}), no zeros in the
/// closed disk and r(0) > 0.
Polynomial fejer_riesz(const TrigPolynomial& v, int samples = kPositivitySamples);

/// k(z) = z / (1 - z)^2
Complex koebe(Complex z);

/// The unique z in the open disk with k(z) = e: the in-disk root of
/// e z^2 - (2e + 1) z + e. Throws InvalidArgument for e = -1.
Complex koebe_preimage(UnimodularPoint e);

/// Finite Blaschke product
///   unimodular_const * z^z_power * prod_k (z - z_k) / (1 - conj(z_k) z).
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  BlaschkeProduct(std::vector<Complex> zeros, int z_power = 0, Complex unimodular_const = 1.0);

  std::span<const Complex> zeros() const noexcept { return zeros_; }
  int z_power() const noexcept { return z_power_; }
  Complex unimodular_const() const noexcept { return const_; }
  /// Number of zeros counted with the power of z.
  int degree() const noexcept { return static_cast<int>(zeros_.size()) + z_power_; }

  RationalFunction as_rational() const;

 private:
  std::vector<Complex> zeros_;
  int z_power_ = 0;
  Complex const_ = 1.0;
};

/// Throws InvalidArgument at a pole (possible only for |z| > 1).
Complex blaschke_eval(const BlaschkeProduct& b, Complex z);

}  // namespace hblab
