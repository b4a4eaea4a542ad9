// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "hblab/kernels.hpp"

namespace hblab::kernels::scalar {

Complex cdot(std::span<const Complex> a, std::span<const Complex> b) {
  const std::size_t n = std::min(a.size(), b.size());
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
    im += a[k].imag() * b[k].real() - a[k].real() * b[k].imag();
  }
  return {re, im};
}

double sum_abs2(std::span<const Complex> a) {
  double s = 0.0;
  for (const Complex& x : a) s += x.real() * x.real() + x.imag() * x.imag();
  return s;
}

void horner_batch(std::span<const Complex> coeffs, std::span<const Complex> points,
                  std::span<Complex> out) {
  const std::size_t n = std::min(points.size(), out.size());
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * points[i] + coeffs[k];
    out[i] = acc;
  }
}

}  // namespace hblab::kernels::scalar
