// SPDX-License-Identifier: Apache-2.0

// Compiled with -mavx2 -mfma. Nothing in here may run unless the dispatcher
// has confirmed CPU support.

#include <algorithm>

#include "hblab/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#define HBLAB_HAVE_AVX2_TU 1
#endif

namespace hblab::kernels::avx2 {

#ifdef HBLAB_HAVE_AVX2_TU

namespace {

// std::complex<double> is layout-compatible with double[2]; two complex values
// fill one __m256d as [re0, im0, re1, im1].
inline const double* as_doubles(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }

inline double hsum(__m128d v) { return _mm_cvtsd_f64(_mm_add_sd(v, _mm_unpackhi_pd(v, v))); }

}  // namespace

Complex cdot(std::span<const Complex> a, std::span<const Complex> b) {
  const std::size_t n = std::min(a.size(), b.size());
  const double* pa = as_doubles(a.data());
  const double* pb = as_doubles(b.data());

  // acc_re lanes: [ar*br, ai*bi, ...]; acc_im lanes: [ar*bi, ai*br, ...]
  __m256d acc_re0 = _mm256_setzero_pd();
  __m256d acc_im0 = _mm256_setzero_pd();
  __m256d acc_re1 = _mm256_setzero_pd();
  __m256d acc_im1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d va0 = _mm256_loadu_pd(pa + 2 * k);
    const __m256d vb0 = _mm256_loadu_pd(pb + 2 * k);
    const __m256d va1 = _mm256_loadu_pd(pa + 2 * k + 4);
    const __m256d vb1 = _mm256_loadu_pd(pb + 2 * k + 4);
    acc_re0 = _mm256_fmadd_pd(va0, vb0, acc_re0);
    acc_im0 = _mm256_fmadd_pd(va0, _mm256_permute_pd(vb0, 0b0101), acc_im0);
    acc_re1 = _mm256_fmadd_pd(va1, vb1, acc_re1);
    acc_im1 = _mm256_fmadd_pd(va1, _mm256_permute_pd(vb1, 0b0101), acc_im1);
  }
  for (; k + 2 <= n; k += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * k);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * k);
    acc_re0 = _mm256_fmadd_pd(va, vb, acc_re0);
    acc_im0 = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), acc_im0);
  }
  const __m256d acc_re = _mm256_add_pd(acc_re0, acc_re1);
  const __m256d acc_im = _mm256_add_pd(acc_im0, acc_im1);

  // Fold the two complex lanes, then combine [x, y] pairs.
  const __m128d re2 = _mm_add_pd(_mm256_castpd256_pd128(acc_re), _mm256_extractf128_pd(acc_re, 1));
  const __m128d im2 = _mm_add_pd(_mm256_castpd256_pd128(acc_im), _mm256_extractf128_pd(acc_im, 1));
  double re = hsum(re2);
  double im = _mm_cvtsd_f64(_mm_unpackhi_pd(im2, im2)) - _mm_cvtsd_f64(im2);

  for (; k < n; ++k) {
    re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
    im += a[k].imag() * b[k].real() - a[k].real() * b[k].imag();
  }
  return {re, im};
}

double sum_abs2(std::span<const Complex> a) {
  const std::size_t n = a.size();
  const double* pa = as_doubles(a.data());
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d v0 = _mm256_loadu_pd(pa + 2 * k);
    const __m256d v1 = _mm256_loadu_pd(pa + 2 * k + 4);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  for (; k + 2 <= n; k += 2) {
    const __m256d v = _mm256_loadu_pd(pa + 2 * k);
    acc0 = _mm256_fmadd_pd(v, v, acc0);
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  double s = hsum(_mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1)));
  for (; k < n; ++k) s += std::norm(a[k]);
  return s;
}

void horner_batch(std::span<const Complex> coeffs, std::span<const Complex> points,
                  std::span<Complex> out) {
  const std::size_t n = std::min(points.size(), out.size());
  const double* pz = as_doubles(points.data());
  double* po = as_doubles(out.data());
  const std::size_t deg1 = coeffs.size();

  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d z = _mm256_loadu_pd(pz + 2 * i);
    const __m256d z_re = _mm256_movedup_pd(z);           // [zr0, zr0, zr1, zr1]
    const __m256d z_im = _mm256_permute_pd(z, 0b1111);   // [zi0, zi0, zi1, zi1]
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = deg1; k-- > 0;) {
      const __m256d c = _mm256_setr_pd(coeffs[k].real(), coeffs[k].imag(), coeffs[k].real(),
                                       coeffs[k].imag());
      // acc * z: even lanes ar*zr - ai*zi, odd lanes ai*zr + ar*zi
      const __m256d swapped = _mm256_permute_pd(acc, 0b0101);
      const __m256d cross = _mm256_mul_pd(swapped, z_im);
      acc = _mm256_add_pd(_mm256_fmaddsub_pd(acc, z_re, cross), c);
    }
    _mm256_storeu_pd(po + 2 * i, acc);
  }
  for (; i < n; ++i) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = deg1; k-- > 0;) acc = acc * points[i] + coeffs[k];
    out[i] = acc;
  }
}

#else  // no AVX2 in this translation unit: forward to the reference path

Complex cdot(std::span<const Complex> a, std::span<const Complex> b) { return scalar::cdot(a, b); }
double sum_abs2(std::span<const Complex> a) { return scalar::sum_abs2(a); }
void horner_batch(std::span<const Complex> coeffs, std::span<const Complex> points,
                  std::span<Complex> out) {
  scalar::horner_batch(coeffs, points, out);
}

#endif

}  // namespace hblab::kernels::avx2
