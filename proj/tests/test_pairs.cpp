// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "hblab/error.hpp"
#include "hblab/pairs.hpp"
#include "hblab/roots.hpp"
#include "support.hpp"

namespace hblab {
namespace {

using testing::Gen;
using testing::coeff_error;
using testing::kAlpha;

const Complex I{0.0, 1.0};

// (1 - alpha) conj(lambda) z / (1 - alpha conj(lambda) z), den(0) = 1.
RationalFunction sarason_b(UnimodularPoint lambda) {
  const Complex lc = lambda.conj();
  return RationalFunction(Polynomial{0.0, (1.0 - kAlpha) * lc}, Polynomial{1.0, -kAlpha * lc});
}

double rational_distance(const RationalFunction& x, const RationalFunction& y) {
  const RationalFunction a = x.normalized();
  const RationalFunction b = y.normalized();
  return std::max(coeff_error(a.num(), b.num()), coeff_error(a.den(), b.den()));
}

TEST(Pairs, SarasonConstantFromSpectralFactorization) {
  const std::vector<UnimodularPoint> one{UnimodularPoint(1.0)};
  const CanonicalPair pair = pair_from_phi(Polynomial::monomial(1), one);
  EXPECT_LE(rational_distance(pair.b, sarason_b(UnimodularPoint(1.0))), 1e-12);
  EXPECT_NEAR(kSarasonAlpha, kAlpha, 1e-16);
}

TEST(Pairs, RotatedSarasonPole) {
  const UnimodularPoint l(I);
  const std::vector<UnimodularPoint> ls{l};
  const CanonicalPair pair = pair_from_phi(Polynomial::monomial(1, l.conj()), ls);
  ASSERT_EQ(pair.b.poles().size(), 1u);
  EXPECT_NEAR(std::abs(pair.b.poles()[0] - I / kAlpha), 0.0, 1e-12);
}

TEST(Pairs, RandomPairsSatisfyTheDefiningIdentity) {
  Gen g(201);
  for (int t = 0; t < 100; ++t) {
    const int m = g.integer(1, 4);
    const std::vector<UnimodularPoint> ls = g.points(m);
    const CanonicalPair pair = pair_from_phi(g.numerator(m + g.integer(0, 2), ls), ls);
    const PairCheck c = check_pair(pair);
    EXPECT_LE(c.identity_residual, 1e-10) << "trial " << t;
    EXPECT_LE(c.sup_b, 1.0 + 1e-12);
    EXPECT_GT(c.a0, 0.0);
    EXPECT_NEAR(c.a0_imag, 0.0, 1e-14);
    EXPECT_GT(c.min_r_root_modulus, 1.0);
    for (const Complex& z : pair.b.poles()) EXPECT_GT(std::abs(z), 1.0);
    EXPECT_EQ(pair.a.pole_class(), PoleClass::OutsideClosedDisk);
  }
}

TEST(Pairs, VanishingNumeratorIsRejected) {
  const std::vector<UnimodularPoint> one{UnimodularPoint(1.0)};
  EXPECT_THROW(pair_from_phi(Polynomial{-1.0, 1.0}, one), InvalidArgument);
  EXPECT_THROW(pair_from_phi(Polynomial{}, one), InvalidArgument);
}

TEST(Pairs, KoebeTargetsAreOrderedRoots) {
  for (int m = 1; m <= 6; ++m) {
    const std::vector<UnimodularPoint> t = koebe_targets(m);
    ASSERT_EQ(static_cast<int>(t.size()), m);
    const Complex target = m % 2 == 1 ? 1.0 : -1.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      EXPECT_NEAR(std::abs(ipow(t[k].value(), m) - target), 0.0, 1e-13);
      if (k > 0) EXPECT_LT(t[k - 1].angle(), t[k].angle());
    }
  }
}

TEST(Prop3, MatchesSarasonAtOrderOne) {
  Gen g(202);
  for (int t = 0; t < 20; ++t) {
    const UnimodularPoint l = t == 0 ? UnimodularPoint(1.0) : g.point();
    const CanonicalPair p3 = prop3_pair(l, 1);
    const CanonicalPair s = sarason_pair(l);
    EXPECT_LE(rational_distance(p3.b, s.b), 1e-12);
    EXPECT_LE(rational_distance(p3.a, s.a), 1e-12);
    EXPECT_LE(rational_distance(p3.b, sarason_b(l)), 1e-12);
  }
}

TEST(Prop3, ModulusIdentityOnTheCircle) {
  Gen g(203);
  for (int m = 1; m <= 4; ++m) {
    for (int t = 0; t < 5; ++t) {
      const UnimodularPoint l = t == 0 ? UnimodularPoint(1.0) : g.point();
      const CanonicalPair pair = prop3_pair(l, m);
      for (int k = 0; k < 1024; ++k) {
        const Complex z = std::polar(1.0, kTwoPi * k / 1024);
        const double rhs = 1.0 + std::pow(std::abs(1.0 - l.conj() * z), 2 * m);
        EXPECT_NEAR(std::norm(pair.r(z)), rhs, 1e-10) << "m=" << m;
      }
      EXPECT_NEAR(std::abs(pair.r(l.value()) - 1.0), 0.0, 1e-12);
      EXPECT_EQ(pair.b(0.0), Complex{});
    }
  }
}

TEST(Prop3, AgreesWithSpectralFactorization) {
  EXPECT_LE(prop3_crosscheck(UnimodularPoint(1.0), 1), 1e-10);
  EXPECT_LE(prop3_crosscheck(UnimodularPoint(1.0), 3), 1e-9);
  EXPECT_LE(prop3_crosscheck(UnimodularPoint::from_turns(0.3), 2), 1e-9);
  Gen g(204);
  for (int t = 0; t < 20; ++t) EXPECT_LE(prop3_crosscheck(g.point(), g.integer(1, 5)), 1e-9);
}

TEST(Prop3, RotationCovariance) {
  Gen g(205);
  for (int m = 1; m <= 4; ++m) {
    const RationalFunction base = prop3_pair(UnimodularPoint(1.0), m).b.normalized();
    for (int t = 0; t < 5; ++t) {
      const UnimodularPoint l = g.point();
      const RationalFunction b = prop3_pair(l, m).b.normalized();
      // b_lambda(z) = b_1(conj(lambda) z): coefficient k picks up conj(lambda)^k.
      for (int k = 0; k <= m; ++k) {
        const Complex s = ipow(l.conj(), k);
        EXPECT_NEAR(std::abs(b.num()[k] - base.num()[k] * s), 0.0, 1e-10);
        EXPECT_NEAR(std::abs(b.den()[k] - base.den()[k] * s), 0.0, 1e-10);
      }
    }
  }
}

TEST(Kernel, Examples) {
  const CanonicalPair pair = prop3_pair(UnimodularPoint(1.0), 1);
  EXPECT_NEAR(std::abs(kernel_eval(pair, 0.0, Complex(0.3, -0.2)) - 1.0), 0.0, 1e-15);

  auto b = [](Complex z) { return (1.0 - kAlpha) * z / (1.0 - kAlpha * z); };
  const Complex w = 0.5, z = 1.0 / 3.0;
  const Complex direct = (1.0 - std::conj(b(w)) * b(z)) / (1.0 - std::conj(w) * z);
  EXPECT_NEAR(std::abs(kernel_eval(pair, w, z) - direct), 0.0, 1e-14);

  EXPECT_THROW(kernel_eval(pair, 1.0, 0.0), InvalidArgument);
}

TEST(Kernel, DiagonalIsPositive) {
  Gen g(206);
  for (int t = 0; t < 100; ++t) {
    const CanonicalPair pair = prop3_pair(g.point(), g.integer(1, 3));
    const Complex w = g.disk(0.99);
    const Complex k = kernel_eval(pair, w, w);
    EXPECT_EQ(k.imag(), 0.0);
    EXPECT_GE(k.real(), 0.0);
  }
}

}  // namespace
}  // namespace hblab
