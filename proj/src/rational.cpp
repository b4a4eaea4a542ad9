// SPDX-License-Identifier: Apache-2.0

#include "hblab/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hblab/error.hpp"
#include "hblab/roots.hpp"

namespace hblab {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
  if (den_.degree() >= 1) poles_ = find_roots(den_).roots;

  bool all_outside = true;
  bool all_boundary = true;
  for (const Complex& z : poles_) {
    const double r = std::abs(z);
    all_outside = all_outside && r > 1.0 + kBoundaryTol;
    all_boundary = all_boundary && std::abs(1.0 - r) <= kBoundaryTol;
  }
  pole_class_ = all_outside    ? PoleClass::OutsideClosedDisk
                : all_boundary ? PoleClass::BoundaryOnly
                               : PoleClass::Mixed;

  if (!poles_.empty() && num_.degree() >= 1) {
    const RootSet zs = find_roots(num_);
    for (const Complex& z : zs.roots)
      for (const Complex& p : poles_)
        if (std::abs(z - p) <= kCommonRootTol * std::max(1.0, std::abs(p)))
          throw InvalidArgument("numerator and denominator share a root");
  }
}

RationalFunction RationalFunction::from_polynomial(Polynomial p) {
  return RationalFunction(std::move(p), Polynomial::constant(1.0));
}

double RationalFunction::min_pole_modulus() const noexcept {
  double r = std::numeric_limits<double>::infinity();
  for (const Complex& z : poles_) r = std::min(r, std::abs(z));
  return r;
}

Complex RationalFunction::operator()(Complex z) const {
  const Complex d = den_(z);
  if (d == Complex{}) throw InvalidArgument("rational function evaluated at a pole");
  return num_(z) / d;
}

RationalFunction RationalFunction::normalized() const {
  const Complex d0 = den_[0];
  if (d0 == Complex{}) throw InvalidArgument("normalized: den(0) == 0");
  RationalFunction out = *this;
  out.num_ = num_ * (1.0 / d0);
  out.den_ = den_ * (1.0 / d0);
  return out;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num() * b.num(), a.den() * b.den());
}

RationalFunction operator*(const Polynomial& p, const RationalFunction& f) {
  return RationalFunction(p * f.num(), f.den());
}

std::vector<Complex> taylor_coeffs(const RationalFunction& f, int n) {
  if (n < 0) return {};
  const Polynomial& num = f.num();
  const Polynomial& den = f.den();
  const Complex d0 = den[0];
  if (d0 == Complex{}) throw InvalidArgument("taylor_coeffs: denominator vanishes at 0");
  // den = d0 prod_k (1 - z / p_k): one first-order recurrence per pole. The
  // recurrence on the expanded denominator amplifies rounding next to a
  // multiple boundary pole.
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = num[k];
  for (const Complex& p : f.poles()) {
    const Complex w = 1.0 / p;
    for (std::size_t k = 1; k < c.size(); ++k) c[k] += w * c[k - 1];
  }
  for (Complex& x : c) x /= d0;
  return c;
}

}  // namespace hblab
