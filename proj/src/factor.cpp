// SPDX-License-Identifier: Apache-2.0

#include "hblab/factor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hblab/error.hpp"

namespace hblab {

namespace {

constexpr double kBoundaryRootTol = 1e-10;
constexpr double kPairingTol = 1e-7;

}  // namespace

SymmetricSplit split_symmetric(const TrigPolynomial& v, int samples) {
  using Kind = FactorizationError::Kind;
  const int m = v.bandwidth();
  if (m < 0) throw FactorizationError(Kind::NotPositive, "trigonometric polynomial is identically zero");

  const std::vector<double> vals = v.sample(std::max(samples, 1));
  const double vmin = *std::min_element(vals.begin(), vals.end());
  if (vmin <= 0.0) {
    double scale = 0.0;
    for (int j = -m; j <= m; ++j) scale += std::abs(v.coeff(j));
    if (vmin < -1e-12 * scale)
      throw FactorizationError(Kind::NotPositive, "trigonometric polynomial is negative on the circle");
    throw FactorizationError(Kind::BoundaryZero, "trigonometric polynomial vanishes on the circle");
  }

  SymmetricSplit out;
  out.w = v.analytic_shift();
  out.bandwidth = m;
  if (m == 0) {
    out.c = v.coeff(0).real();
    return out;
  }

  out.roots = find_roots(out.w);
  std::vector<Complex> inner;
  for (const Complex& z : out.roots.roots) {
    const double r = std::abs(z);
    if (std::abs(r - 1.0) <= kBoundaryRootTol)
      throw FactorizationError(Kind::BoundaryZero, "trigonometric polynomial vanishes on the circle");
    (r > 1.0 ? out.outside : inner).push_back(z);
  }
  if (out.outside.size() != static_cast<std::size_t>(m) || inner.size() != out.outside.size())
    throw FactorizationError(Kind::Unpaired, "roots are not split evenly across the circle");

  std::sort(out.outside.begin(), out.outside.end(), [](Complex a, Complex b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : std::arg(a) < std::arg(b);
  });
  std::vector<bool> used(inner.size(), false);
  for (const Complex& w : out.outside) {
    const Complex target = 1.0 / std::conj(w);
    std::size_t best = inner.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (used[i]) continue;
      const double d = std::abs(inner[i] - target);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    if (best == inner.size() || best_d > kPairingTol * std::abs(target))
      throw FactorizationError(Kind::Unpaired, "root without a partner at 1/conj(w)");
    used[best] = true;
    out.inside.push_back(inner[best]);
  }

  double prod = 1.0;
  for (const Complex& w : out.outside) prod *= std::abs(w);
  out.c = std::abs(out.w[2 * m]) / prod;
  return out;
}

Polynomial fejer_riesz(const TrigPolynomial& v, int samples) {
  const SymmetricSplit s = split_symmetric(v, samples);
  // r(z) = sqrt(c) prod |w_j| (1 - z / w_j)
  double scale = std::sqrt(s.c);
  Polynomial r = Polynomial::constant(1.0);
  for (const Complex& w : s.outside) {
    scale *= std::abs(w);
    r = r * Polynomial{1.0, -1.0 / w};
  }
  return scale * r;
}

Complex koebe(Complex z) {
  const Complex d = (1.0 - z) * (1.0 - z);
  if (d == Complex{}) throw InvalidArgument("koebe function evaluated at 1");
  return z / d;
}

Complex koebe_preimage(UnimodularPoint e) {
  const Complex ev = e.value();
  if (std::abs(ev + 1.0) <= 1e-12) throw InvalidArgument("koebe_preimage: -1 has no preimage in the disk");
  // Roots of e z^2 - (2e + 1) z + e multiply to 1; take the large one stably
  // and return its reciprocal.
  const Complex b = 2.0 * ev + 1.0;
  const Complex s = std::sqrt(4.0 * ev + 1.0);
  const Complex n = std::abs(b + s) >= std::abs(b - s) ? b + s : b - s;
  return 2.0 * ev / n;
}

BlaschkeProduct::BlaschkeProduct(std::vector<Complex> zeros, int z_power, Complex unimodular_const)
    : zeros_(std::move(zeros)), z_power_(z_power), const_(unimodular_const) {
  if (z_power_ < 0) throw InvalidArgument("Blaschke product: negative power of z");
  if (std::abs(std::abs(const_) - 1.0) > 1e-12) throw InvalidArgument("Blaschke product: constant is not unimodular");
  for (const Complex& z : zeros_)
    if (!(std::abs(z) < 1.0 - 1e-12)) throw InvalidArgument("Blaschke product: zero outside the open disk");
}

RationalFunction BlaschkeProduct::as_rational() const {
  Polynomial num = Polynomial::monomial(z_power_, const_);
  Polynomial den = Polynomial::constant(1.0);
  for (const Complex& z : zeros_) {
    num = num * Polynomial{-z, 1.0};
    den = den * Polynomial{1.0, -std::conj(z)};
  }
  return RationalFunction(std::move(num), std::move(den));
}

Complex blaschke_eval(const BlaschkeProduct& b, Complex z) {
  Complex v = b.unimodular_const() * ipow(z, b.z_power());
  for (const Complex& a : b.zeros()) {
    const Complex d = 1.0 - std::conj(a) * z;
    if (d == Complex{}) throw InvalidArgument("Blaschke product evaluated at a pole");
    v *= (z - a) / d;
  }
  return v;
}

}  // namespace hblab
