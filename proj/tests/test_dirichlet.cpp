// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "hblab/dirichlet.hpp"
#include "hblab/error.hpp"
#include "hblab/hardy.hpp"
#include "support.hpp"

namespace hblab {
namespace {

using testing::Gen;
using testing::coeff_error;

const UnimodularPoint kOne(1.0);

TEST(Decompose, Examples) {
  const DirichletDecomposition d = decompose(Polynomial::monomial(2), kOne, 1);
  EXPECT_LE(coeff_error(d.section, Polynomial{1.0}), 1e-15);
  EXPECT_LE(coeff_error(d.g, Polynomial{1.0, 1.0}), 1e-15);

  const Polynomial small{1.0, 2.0};
  const DirichletDecomposition s = decompose(small, kOne, 3);
  EXPECT_LE(coeff_error(s.section, small), 1e-15);
  EXPECT_TRUE(s.g.is_zero());

  const UnimodularPoint l = UnimodularPoint::from_turns(0.2);
  const DirichletDecomposition p = decompose(Polynomial::linear_power(l.value(), 3), l, 3);
  EXPECT_LE(p.section.max_abs(), 1e-14);
  EXPECT_LE(coeff_error(p.g, Polynomial{1.0}), 1e-14);

  EXPECT_THROW(decompose(small, kOne, 0), InvalidArgument);
}

TEST(Decompose, ReconstructsRandomInputs) {
  Gen g(401);
  for (int t = 0; t < 200; ++t) {
    const int m = g.integer(1, 3);
    const Polynomial f = g.poly(20);
    const UnimodularPoint l = g.point();
    const DirichletDecomposition d = decompose(f, l, m);
    EXPECT_LE(d.reconstruction_residual(f), 1e-10 * std::max(f.norm(), 1.0)) << "trial " << t;
    EXPECT_EQ(dirichlet_m(f, l, m), d.g.norm() * d.g.norm());
  }
}

TEST(LocalDirichlet, Examples) {
  EXPECT_NEAR(dirichlet_m(Polynomial::monomial(2), kOne, 1), 2.0, 1e-15);
  EXPECT_EQ(dirichlet_m(Polynomial{7.0}, kOne, 1), 0.0);
  EXPECT_NEAR(dirichlet_m(Polynomial::monomial(3), kOne, 2), 5.0, 1e-14);
  EXPECT_NEAR(dm_norm(Polynomial::monomial(2), kOne, 1), 3.0, 1e-15);
  EXPECT_NEAR(dm_norm(Polynomial{1.0}, kOne, 1), 1.0, 1e-15);
}

TEST(LocalDirichlet, NormDominatesH2) {
  Gen g(402);
  for (int t = 0; t < 100; ++t) {
    const Polynomial f = g.poly(20);
    EXPECT_GE(dm_norm(f, g.point(), g.integer(1, 3)), f.norm() * f.norm());
  }
}

TEST(LocalDirichlet, EqualsTheProp3HbNorm) {
  Gen g(403);
  const std::vector<UnimodularPoint> lambdas{kOne, UnimodularPoint(Complex(0.0, 1.0)), UnimodularPoint::from_turns(0.37)};
  for (int m = 1; m <= 3; ++m) {
    for (const UnimodularPoint& l : lambdas) {
      const CanonicalPair pair = prop3_pair(l, m);
      for (int t = 0; t < 100; ++t) {
        const Polynomial f = g.poly(20);
        const double nb = hb_norm_sq(pair, f);
        EXPECT_NEAR(dm_norm(f, l, m), nb, 1e-9 * nb) << "m=" << m << " trial " << t;
      }
    }
  }
}

TEST(Bergman, MomentExamples) {
  EXPECT_DOUBLE_EQ(bergman_moment(0, 1).value, 0.5);
  EXPECT_DOUBLE_EQ(bergman_moment(0, 2).value, 0.25);
  for (int m = 1; m <= 4; ++m)
    for (int k = 0; k < 40; ++k) {
      const double ratio = bergman_moment(k + 1, m).value / bergman_moment(k, m).value;
      EXPECT_NEAR(ratio, (k + 1.0) / (k + 1.0 + 2 * m), 1e-14);
      EXPECT_LT(ratio, 1.0);
    }
  EXPECT_THROW(bergman_moment(-1, 1), InvalidArgument);
}

TEST(AreaNorm, SeriesExamples) {
  EXPECT_NEAR(a2_norm_series(RationalFunction(Polynomial{1.0}, Polynomial{-1.0, 1.0}), 1), 1.0, 1e-13);
  EXPECT_NEAR(a2_norm_series(RationalFunction(Polynomial{2.0}, Polynomial{1.0, -2.0, 1.0}), 2), 6.0, 1e-12);
  EXPECT_EQ(a2_norm_series(RationalFunction::from_polynomial(Polynomial{}), 2), 0.0);
  EXPECT_NEAR(a2_norm_series(RationalFunction::from_polynomial(Polynomial::monomial(1)), 1), 1.0 / 6.0, 1e-15);
}

TEST(AreaNorm, PoleOrderAboveMIsRejected) {
  EXPECT_THROW(a2_norm_series(RationalFunction(Polynomial{1.0}, Polynomial{1.0, -2.0, 1.0}), 1), InvalidArgument);
  EXPECT_THROW(a2_norm_series(RationalFunction(Polynomial{1.0}, Polynomial{-2.0, 1.0}), 1), InvalidArgument);
}

TEST(AreaNorm, QuadratureExamples) {
  const Complex c{1.5, -0.5};
  EXPECT_NEAR(a2_norm_quadrature(RationalFunction::from_polynomial(Polynomial{c}), 1, 40, 64), std::norm(c) / 2.0,
              1e-12);
  EXPECT_NEAR(a2_norm_quadrature(RationalFunction::from_polynomial(Polynomial::monomial(1)), 1, 40, 64), 1.0 / 6.0,
              1e-12);
  const RationalFunction h(Polynomial{1.0}, Polynomial{-1.0, 1.0});
  const double q = a2_norm_quadrature(h, 1, 400, 1024);
  EXPECT_NEAR(q, a2_norm_series(h, 1), 1e-4);
}

TEST(Theorem1, Anchors) {
  const Theorem1Result a = theorem1_check(Polynomial{-1.0, 1.0}, kOne, 1);
  EXPECT_NEAR(a.area_norm, 1.0, 1e-13);
  EXPECT_NEAR(a.scaled_dirichlet, 1.0, 1e-15);

  const Theorem1Result b = theorem1_check(Polynomial{1.0, -2.0, 1.0}, kOne, 2);
  EXPECT_NEAR(b.area_norm, 6.0, 1e-12);
  EXPECT_NEAR(b.scaled_dirichlet, 6.0, 1e-14);

  const Theorem1Result c = theorem1_check(Polynomial{1.0, 1.0}, kOne, 2);
  EXPECT_EQ(c.area_norm, 0.0);
  EXPECT_EQ(c.scaled_dirichlet, 0.0);
}

TEST(Theorem1, RandomInstancesBothRoutes) {
  Gen g(404);
  for (int t = 0; t < 60; ++t) {
    const int m = 1 + t % 3;
    const UnimodularPoint l = g.point();
    const Polynomial f = g.poly(20);
    const Theorem1Result r = theorem1_check(f, l, m);
    EXPECT_LE(r.residual, 1e-6) << "m=" << m << " trial " << t;
    if (t < 6) {
      const double q = a2_norm_quadrature(theorem1_integrand(f, l, m), m, 400, 1024);
      EXPECT_NEAR(q, r.area_norm, 1e-4 * std::max(1.0, r.area_norm)) << "m=" << m << " trial " << t;
    }
  }
}

TEST(Theorem1, IntegrandCancelsCommonFactors) {
  const RationalFunction h = theorem1_integrand(Polynomial{1.0, -2.0, 1.0}, kOne, 2);
  EXPECT_EQ(h.den().degree(), 2);
  EXPECT_LE(coeff_error(h.num(), Polynomial{2.0}), 1e-15);
  const RationalFunction k = theorem1_integrand(pow(Polynomial{-1.0, 1.0}, 4), kOne, 2);
  EXPECT_TRUE(k.is_polynomial());
  EXPECT_LE(coeff_error(k.num() * (1.0 / k.den()[0]), Polynomial{12.0}), 1e-12);
}

}  // namespace
}  // namespace hblab
