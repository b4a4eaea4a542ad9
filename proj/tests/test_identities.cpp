// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "hblab/error.hpp"
#include "hblab/identities.hpp"

namespace hblab {
namespace {

mpz_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

ExactSeries2 monomial(int order, int j, int k, long c = 1) {
  ExactSeries2 s(order);
  s(j, k) = c;
  return s;
}

TEST(ExactSeries2, Derivatives) {
  const ExactSeries2 zu = monomial(6, 1, 1);
  const ExactSeries2 d = series_dz(zu);
  EXPECT_EQ(d.z_order(), 5);
  EXPECT_EQ(d(0, 1), 1);
  EXPECT_EQ(d(0, 0), 0);
  EXPECT_EQ(d(1, 1), 0);

  const ExactSeries2 g = geometric_series2(8);
  EXPECT_EQ(series_du(series_dz(g)), series_dz(series_du(g)));
  const ExactSeries2 f = boundary_factor_series2(8, 2);
  EXPECT_EQ(series_du(series_dz(f)), series_dz(series_du(f)));
}

TEST(ExactSeries2, ProductOfConjugateFactors) {
  const int N = 6;
  const ExactSeries2 one = monomial(N, 0, 0);
  const ExactSeries2 zu = monomial(N, 1, 1);
  const ExactSeries2 lhs = series_mul(series_add(one, zu), series_sub(one, zu));
  const ExactSeries2 rhs = series_sub(one, monomial(N, 2, 2));
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(series_scale(zu, mpq_class(1, 3))(1, 1), mpq_class(1, 3));
}

TEST(ExactSeries2, GeometricSeries) {
  const ExactSeries2 g = geometric_series2(2);
  for (int j = 0; j <= 2; ++j)
    for (int k = 0; k <= 2; ++k) EXPECT_EQ(g(j, k), j == k ? 1 : 0);

  // (1 - z u) * sum (z u)^k = 1 up to the truncation order.
  const int N = 10;
  const ExactSeries2 p = series_mul(series_sub(monomial(N, 0, 0), monomial(N, 1, 1)), geometric_series2(N));
  for (int j = 0; j <= N; ++j)
    for (int k = 0; k <= N; ++k)
      if (j + k <= N) EXPECT_EQ(p(j, k), j == 0 && k == 0 ? 1 : 0) << j << "," << k;
}

TEST(ExactSeries2, BinomialSeries) {
  for (int m = 1; m <= 4; ++m) {
    const ExactSeries2 b = binomial_series2(12, 2 * m + 1);
    for (int k = 0; k <= 12; ++k) {
      EXPECT_EQ(b(k, k), mpq_class(binomial(k + 2 * m, 2 * m)));
      if (k > 0) EXPECT_EQ(b(k, k - 1), 0);
    }
    EXPECT_TRUE(binomial_crosscheck(m, 2 * m + 8));
  }
}

TEST(Lemma1, OrderOneByHand) {
  const int N = 8;
  // d/du d/dz [(u - 1)(z - 1)/(1 - z u)] has constant term 2 = 2!.
  ExactSeries2 lhs = series_mul(boundary_factor_series2(N, 1), geometric_series2(N));
  lhs = series_du(series_dz(lhs));
  EXPECT_EQ(lhs(0, 0), 2);
  const Lemma1Result r = lemma1_check(1, N);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.first_mismatch.has_value());
}

TEST(Lemma1, HoldsExactlyUpToOrderFive) {
  for (int m = 1; m <= 5; ++m) {
    const Lemma1Result r = lemma1_check(m, 2 * m + 8);
    EXPECT_TRUE(r.pass) << "m=" << m;
  }
  EXPECT_TRUE(lemma1_check(2, 10).pass);
}

TEST(Lemma1, CorruptedConstantFailsAtTheOrigin) {
  for (int m = 1; m <= 3; ++m) {
    const Lemma1Result r = lemma1_check(m, 2 * m + 8, 1);
    EXPECT_FALSE(r.pass);
    ASSERT_TRUE(r.first_mismatch.has_value());
    EXPECT_EQ(*r.first_mismatch, std::make_pair(0, 0));
  }
}

TEST(Lemma1, RejectsBadOrders) {
  EXPECT_THROW(lemma1_check(0, 8), InvalidArgument);
  EXPECT_THROW(lemma1_check(3, 5), InvalidArgument);
}

}  // namespace
}  // namespace hblab
