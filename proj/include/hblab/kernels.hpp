// SPDX-License-Identifier: Apache-2.0

#pragma once

// Data-parallel inner loops. Every kernel has a portable scalar reference
// implementation and, on x86-64, an AVX2/FMA variant selected once at runtime
// from CPUID. Setting HBLAB_KERNELS=scalar in the environment forces the
// reference path. The two paths agree to rounding (FMA and lane-wise
// summation change the order of operations), not bit for bit.

#include <span>
#include <string_view>

#include "hblab/types.hpp"

namespace hblab::kernels {

enum class Backend { Scalar, Avx2 };

Backend active_backend() noexcept;
std::string_view backend_name(Backend b) noexcept;
bool backend_available(Backend b) noexcept;

/// sum_k a[k] * conj(b[k]) over the common length.
Complex cdot(std::span<const Complex> a, std::span<const Complex> b);

/// sum_k |a[k]|^2
double sum_abs2(std::span<const Complex> a);

/// out[i] = sum_k coeffs[k] * points[i]^k (Horner, ascending coefficients).
void horner_batch(std::span<const Complex> coeffs, std::span<const Complex> points,
                  std::span<Complex> out);

// Explicit backends, exposed for equivalence testing.
namespace scalar {
Complex cdot(std::span<const Complex> a, std::span<const Complex> b);
double sum_abs2(std::span<const Complex> a);
void horner_batch(std::span<const Complex> coeffs, std::span<const Complex> points,
                  std::span<Complex> out);
}  // namespace scalar

namespace avx2 {
Complex cdot(std::span<const Complex> a, std::span<const Complex> b);
double sum_abs2(std::span<const Complex> a);
void horner_batch(std::span<const Complex> coeffs, std::span<const Complex> points,
                  std::span<Complex> out);
}  // namespace avx2

}  // namespace hblab::kernels
