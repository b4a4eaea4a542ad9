// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <string_view>

#include "hblab/kernels.hpp"

namespace hblab::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(HBLAB_BUILD_AVX2) && (defined(__x86_64__) || defined(__i386__)) && \
    (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend select_backend() noexcept {
  if (const char* env = std::getenv("HBLAB_KERNELS"); env && std::string_view(env) == "scalar")
    return Backend::Scalar;
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

}  // namespace

Backend active_backend() noexcept {
  static const Backend active = select_backend();
  return active;
}

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::Avx2:
      return "avx2";
    case Backend::Scalar:
      break;
  }
  return "scalar";
}

bool backend_available(Backend b) noexcept { return b == Backend::Scalar || cpu_has_avx2(); }

Complex cdot(std::span<const Complex> a, std::span<const Complex> b) {
  return active_backend() == Backend::Avx2 ? avx2::cdot(a, b) : scalar::cdot(a, b);
}

double sum_abs2(std::span<const Complex> a) {
  return active_backend() == Backend::Avx2 ? avx2::sum_abs2(a) : scalar::sum_abs2(a);
}

void horner_batch(std::span<const Complex> coeffs, std::span<const Complex> points,
                  std::span<Complex> out) {
  if (active_backend() == Backend::Avx2)
    avx2::horner_batch(coeffs, points, out);
  else
    scalar::horner_batch(coeffs, points, out);
}

}  // namespace hblab::kernels
