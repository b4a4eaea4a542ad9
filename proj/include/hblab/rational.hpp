// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "hblab/polynomial.hpp"

namespace hblab {

enum class PoleClass {
  OutsideClosedDisk,  // every pole has modulus > 1 + 1e-12 (vacuous for polynomials)
  BoundaryOnly,       // every pole within 1e-12 of the unit circle
  Mixed,
};

/// num/den with poles located and classified at construction. Arithmetic
/// never reduces; the constructor rejects numerator and denominator sharing a
/// root (within 1e-9).
class RationalFunction {
 public:
  static constexpr double kCommonRootTol = 1e-9;
  static constexpr double kBoundaryTol = 1e-12;

  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction from_polynomial(Polynomial p);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  PoleClass pole_class() const noexcept { return pole_class_; }
  std::span<const Complex> poles() const noexcept { return poles_; }
  /// Smallest pole modulus; +infinity when there are no poles.
  double min_pole_modulus() const noexcept;
  bool is_polynomial() const noexcept { return poles_.empty(); }

  Complex operator()(Complex z) const;

  /// The same function with den(0) = 1. Requires den(0) != 0.
  RationalFunction normalized() const;

 private:
  Polynomial num_;
  Polynomial den_;
  std::vector<Complex> poles_;
  PoleClass pole_class_ = PoleClass::OutsideClosedDisk;
};

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const Polynomial& p, const RationalFunction& f);

/// First n+1 Taylor coefficients at 0: the numerator passed through one
/// first-order recurrence per located pole. Throws InvalidArgument when
/// den(0) == 0.
std::vector<Complex> taylor_coeffs(const RationalFunction& f, int n);

}  // namespace hblab
