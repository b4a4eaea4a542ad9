// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hblab {

/// Truncated power series sum c_{jk} z^j u^k over exact rationals, known for
/// j <= z_order and k <= u_order.
class ExactSeries2 {
 public:
  ExactSeries2() : ExactSeries2(0, 0) {}
  ExactSeries2(int z_order, int u_order);
  /// Both orders equal to `order`.
  explicit ExactSeries2(int order) : ExactSeries2(order, order) {}

  int z_order() const noexcept { return zo_; }
  int u_order() const noexcept { return uo_; }

  const mpq_class& operator()(int j, int k) const;
  mpq_class& operator()(int j, int k);

  friend bool operator==(const ExactSeries2&, const ExactSeries2&) = default;

 private:
  int zo_;
  int uo_;
  std::vector<mpq_class> c_;  // row-major in j
};

/// Orders of the result are the smaller of the operands' orders.
ExactSeries2 series_add(const ExactSeries2& a, const ExactSeries2& b);
ExactSeries2 series_sub(const ExactSeries2& a, const ExactSeries2& b);
ExactSeries2 series_mul(const ExactSeries2& a, const ExactSeries2& b);
ExactSeries2 series_scale(const ExactSeries2& a, const mpq_class& s);
/// d/dz; the z order drops by one.
ExactSeries2 series_dz(const ExactSeries2& a);
/// d/du; the u order drops by one.
ExactSeries2 series_du(const ExactSeries2& a);

/// sum_{k <= N} z^k u^k
ExactSeries2 geometric_series2(int N);
/// (1 - z u)^(-e) = sum_k C(k + e - 1, e - 1) z^k u^k to order N.
ExactSeries2 binomial_series2(int N, int e);
/// (z - 1)^m (u - 1)^m to order N.
ExactSeries2 boundary_factor_series2(int N, int m);

struct Lemma1Result {
  bool pass = false;
  /// First differing (j, k), ordered by j + k and then j.
  std::optional<std::pair<int, int>> first_mismatch;
};

/// Compares, for j + k <= N - m,
///   d^m/du^m d^m/dz^m [ (u-1)^m (z-1)^m / (1 - z u) ]
/// with (2m)! (u-1)^m (z-1)^m / (1 - z u)^(2m+1). `rhs_constant_offset` is
/// added to (2m)! (a negative control).
Lemma1Result lemma1_check(int m, int N, long rhs_constant_offset = 0);

/// binomial_series2(N, 2m + 1) against the (2m + 1)-fold product of
/// geometric_series2(N).
bool binomial_crosscheck(int m, int N);

}  // namespace hblab
