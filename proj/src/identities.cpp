// SPDX-License-Identifier: Apache-2.0

#include "hblab/identities.hpp"

#include <algorithm>

#include "hblab/error.hpp"

namespace hblab {

ExactSeries2::ExactSeries2(int z_order, int u_order) : zo_(z_order), uo_(u_order) {
  if (z_order < 0 || u_order < 0) throw InvalidArgument("ExactSeries2: negative order");
  c_.assign(static_cast<std::size_t>(z_order + 1) * static_cast<std::size_t>(u_order + 1), mpq_class(0));
}

const mpq_class& ExactSeries2::operator()(int j, int k) const {
  return c_[static_cast<std::size_t>(j) * static_cast<std::size_t>(uo_ + 1) + static_cast<std::size_t>(k)];
}

mpq_class& ExactSeries2::operator()(int j, int k) {
  return c_[static_cast<std::size_t>(j) * static_cast<std::size_t>(uo_ + 1) + static_cast<std::size_t>(k)];
}

namespace {

template <class Op>
ExactSeries2 combine(const ExactSeries2& a, const ExactSeries2& b, Op op) {
  ExactSeries2 r(std::min(a.z_order(), b.z_order()), std::min(a.u_order(), b.u_order()));
  for (int j = 0; j <= r.z_order(); ++j)
    for (int k = 0; k <= r.u_order(); ++k) r(j, k) = op(a(j, k), b(j, k));
  return r;
}

}  // namespace

ExactSeries2 series_add(const ExactSeries2& a, const ExactSeries2& b) {
  return combine(a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x + y); });
}

ExactSeries2 series_sub(const ExactSeries2& a, const ExactSeries2& b) {
  return combine(a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x - y); });
}

ExactSeries2 series_mul(const ExactSeries2& a, const ExactSeries2& b) {
  ExactSeries2 r(std::min(a.z_order(), b.z_order()), std::min(a.u_order(), b.u_order()));
  for (int j1 = 0; j1 <= r.z_order(); ++j1)
    for (int k1 = 0; k1 <= r.u_order(); ++k1) {
      const mpq_class& x = a(j1, k1);
      if (sgn(x) == 0) continue;
      for (int j2 = 0; j1 + j2 <= r.z_order(); ++j2)
        for (int k2 = 0; k1 + k2 <= r.u_order(); ++k2) {
          const mpq_class& y = b(j2, k2);
          if (sgn(y) != 0) r(j1 + j2, k1 + k2) += x * y;
        }
    }
  return r;
}

ExactSeries2 series_scale(const ExactSeries2& a, const mpq_class& s) {
  ExactSeries2 r(a.z_order(), a.u_order());
  for (int j = 0; j <= a.z_order(); ++j)
    for (int k = 0; k <= a.u_order(); ++k) r(j, k) = a(j, k) * s;
  return r;
}

ExactSeries2 series_dz(const ExactSeries2& a) {
  if (a.z_order() == 0) throw InvalidArgument("series_dz: z order exhausted");
  ExactSeries2 r(a.z_order() - 1, a.u_order());
  for (int j = 0; j <= r.z_order(); ++j)
    for (int k = 0; k <= r.u_order(); ++k) r(j, k) = a(j + 1, k) * (j + 1);
  return r;
}

ExactSeries2 series_du(const ExactSeries2& a) {
  if (a.u_order() == 0) throw InvalidArgument("series_du: u order exhausted");
  ExactSeries2 r(a.z_order(), a.u_order() - 1);
  for (int j = 0; j <= r.z_order(); ++j)
    for (int k = 0; k <= r.u_order(); ++k) r(j, k) = a(j, k + 1) * (k + 1);
  return r;
}

ExactSeries2 geometric_series2(int N) {
  ExactSeries2 r(N);
  for (int k = 0; k <= N; ++k) r(k, k) = 1;
  return r;
}

ExactSeries2 binomial_series2(int N, int e) {
  if (e < 1) throw InvalidArgument("binomial_series2: exponent must be positive");
  ExactSeries2 r(N);
  // C(k + e - 1, e - 1), updated by C(k + e, e - 1) = C(k + e - 1, e - 1) (k + e) / (k + 1)
  mpz_class c = 1;
  for (int k = 0; k <= N; ++k) {
    r(k, k) = c;
    c = c * (k + e) / (k + 1);
  }
  return r;
}

ExactSeries2 boundary_factor_series2(int N, int m) {
  ExactSeries2 z1(N), u1(N);
  z1(0, 0) = -1;
  u1(0, 0) = -1;
  if (N >= 1) {
    z1(1, 0) = 1;
    u1(0, 1) = 1;
  }
  ExactSeries2 r(N);
  r(0, 0) = 1;
  for (int i = 0; i < m; ++i) r = series_mul(series_mul(r, z1), u1);
  return r;
}

Lemma1Result lemma1_check(int m, int N, long rhs_constant_offset) {
  if (m < 1 || N < 2 * m) throw InvalidArgument("lemma1_check: need m >= 1 and N >= 2m");
  const ExactSeries2 f = boundary_factor_series2(N, m);

  ExactSeries2 lhs = series_mul(f, geometric_series2(N));
  for (int i = 0; i < m; ++i) lhs = series_dz(lhs);
  for (int i = 0; i < m; ++i) lhs = series_du(lhs);

  mpz_class c = 1;
  for (int i = 2; i <= 2 * m; ++i) c *= i;
  c += rhs_constant_offset;
  const ExactSeries2 rhs = series_scale(series_mul(f, binomial_series2(N, 2 * m + 1)), mpq_class(c));

  Lemma1Result out;
  const int top = N - m;
  for (int s = 0; s <= top; ++s)
    for (int j = 0; j <= s; ++j)
      if (lhs(j, s - j) != rhs(j, s - j)) {
        out.first_mismatch = std::make_pair(j, s - j);
        return out;
      }
  out.pass = true;
  return out;
}

bool binomial_crosscheck(int m, int N) {
  const ExactSeries2 g = geometric_series2(N);
  ExactSeries2 p = g;
  for (int i = 1; i < 2 * m + 1; ++i) p = series_mul(p, g);
  return p == binomial_series2(N, 2 * m + 1);
}

}  // namespace hblab
