// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hblab/polynomial.hpp"

namespace hblab::testing {

// Seeded generators for property tests. Every test draws from its own stream
// so that adding a test never shifts another test's inputs.
class Gen {
 public:
  explicit Gen(std::uint64_t stream) : eng_(0x5eed0000u + stream) {}

  double normal() { return normal_(eng_); }
  double uniform() { return uniform_(eng_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  Complex cnormal() { return {normal(), normal()}; }

  /// Point of the open disk with modulus below `rmax`.
  Complex disk(double rmax) { return std::polar(rmax * std::sqrt(uniform()), kTwoPi * uniform()); }
  UnimodularPoint point() { return UnimodularPoint::from_turns(uniform()); }
  std::vector<UnimodularPoint> points(int m) {
    std::vector<UnimodularPoint> out;
    for (int j = 0; j < m; ++j) out.push_back(point());
    return out;
  }

  Polynomial poly_exact(int degree) {
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (Complex& x : c) x = cnormal();
    return Polynomial(std::move(c));
  }
  Polynomial poly(int max_degree) { return poly_exact(integer(0, max_degree)); }

  /// Degree <= m with |p(lambda_j)| bounded away from zero.
  Polynomial numerator(int m, const std::vector<UnimodularPoint>& lambdas) {
    while (true) {
      Polynomial p = poly(m);
      bool ok = !p.is_zero();
      for (const UnimodularPoint& l : lambdas) ok = ok && std::abs(p(l.value())) > 1e-3 * p.max_abs();
      if (ok) return p;
    }
  }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_;
  std::uniform_real_distribution<double> uniform_;
};

inline double coeff_error(const Polynomial& a, const Polynomial& b) { return max_coeff_distance(a, b); }

inline const double kAlpha = (3.0 - std::sqrt(5.0)) / 2.0;

}  // namespace hblab::testing
