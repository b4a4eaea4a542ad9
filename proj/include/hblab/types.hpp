// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <numbers>

namespace hblab {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// z^n by repeated squaring; ipow(z, 0) == 1 for every z.
inline Complex ipow(Complex z, int n) {
  Complex r{1.0, 0.0};
  const bool invert = n < 0;
  unsigned k = invert ? static_cast<unsigned>(-n) : static_cast<unsigned>(n);
  while (k) {
    if (k & 1u) r *= z;
    z *= z;
    k >>= 1u;
  }
  return invert ? 1.0 / r : r;
}

/// A point of the unit circle. Construction rejects values whose modulus is
/// off by more than 1e-12; use `normalized` to accept looser user input.
class UnimodularPoint {
 public:
  explicit UnimodularPoint(Complex value);

  static UnimodularPoint from_turns(double turns);
  /// Rescales `value` onto the circle when ||value| - 1| <= tol.
  static UnimodularPoint normalized(Complex value, double tol = 1e-9);

  Complex value() const noexcept { return value_; }
  Complex conj() const noexcept { return std::conj(value_); }
  double angle() const noexcept { return std::arg(value_); }

  friend bool operator==(const UnimodularPoint&, const UnimodularPoint&) = default;

 private:
  Complex value_;
};

}  // namespace hblab
