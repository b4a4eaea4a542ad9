// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "hblab/error.hpp"
#include "hblab/polynomial.hpp"
#include "hblab/rational.hpp"
#include "hblab/roots.hpp"
#include "support.hpp"

namespace hblab {
namespace {

using testing::Gen;
using testing::coeff_error;

const Complex I{0.0, 1.0};

TEST(Polynomial, ArithmeticExamples) {
  EXPECT_EQ(coeff_error(derivative(Polynomial{0.0, 0.0, 1.0}), Polynomial{0.0, 2.0}), 0.0);
  EXPECT_EQ(coeff_error(Polynomial{-1.0, 1.0} * Polynomial{1.0, 1.0}, Polynomial{-1.0, 0.0, 1.0}), 0.0);
  EXPECT_TRUE(derivative(Polynomial{5.0}).is_zero());
}

TEST(Polynomial, TrimsNegligibleLeadingCoefficients) {
  const Polynomial p{1.0, 2.0, 1e-15};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(Polynomial(std::vector<Complex>{0.0, 0.0}).is_zero());
  EXPECT_EQ(Polynomial{}.degree(), -1);
}

TEST(Polynomial, DivremExamples) {
  DivRem a = divrem(Polynomial{-1.0, 0.0, 1.0}, Polynomial{-1.0, 1.0});
  EXPECT_EQ(coeff_error(a.quotient, Polynomial{1.0, 1.0}), 0.0);
  EXPECT_TRUE(a.remainder.is_zero());

  DivRem b = divrem(Polynomial{0.0, 0.0, 1.0}, Polynomial{-1.0, 1.0});
  EXPECT_EQ(coeff_error(b.quotient, Polynomial{1.0, 1.0}), 0.0);
  EXPECT_EQ(coeff_error(b.remainder, Polynomial{1.0}), 0.0);

  DivRem c = divrem(Polynomial{1.0}, Polynomial{0.0, 1.0});
  EXPECT_TRUE(c.quotient.is_zero());
  EXPECT_EQ(coeff_error(c.remainder, Polynomial{1.0}), 0.0);

  EXPECT_THROW(divrem(Polynomial{1.0}, Polynomial{}), InvalidArgument);
}

TEST(Polynomial, DivremReconstructsRandomInputs) {
  Gen g(1);
  for (int t = 0; t < 200; ++t) {
    const Polynomial f = g.poly(25);
    // Long division is forward stable when no root of d lies inside the disk;
    // elsewhere the quotient outgrows the relative trimming threshold.
    std::vector<Complex> roots(static_cast<std::size_t>(g.integer(0, 8)));
    for (Complex& z : roots) z = std::polar(g.uniform(1.0, 2.0), kTwoPi * g.uniform());
    const Polynomial d = Polynomial::from_roots(roots, g.cnormal());
    const DivRem qr = divrem(f, d);
    EXPECT_LT(qr.remainder.degree(), std::max(d.degree(), 1));
    const double scale = std::max({f.max_abs(), qr.quotient.max_abs() * d.max_abs(), 1.0});
    EXPECT_LE(coeff_error(qr.quotient * d + qr.remainder, f), 1e-12 * scale) << "trial " << t;
  }
}

TEST(Polynomial, ReflectExamples) {
  const Complex a0{1.0, 2.0}, a1{-3.0, 0.5};
  EXPECT_EQ(coeff_error(reflect(Polynomial{a0, a1}, 1), Polynomial{std::conj(a1), std::conj(a0)}), 0.0);
  EXPECT_EQ(coeff_error(reflect(Polynomial::monomial(3), 3), Polynomial{1.0}), 0.0);
  EXPECT_EQ(coeff_error(reflect(Polynomial{{1.0, 2.0}, 0.0, 1.0}, 2), Polynomial{1.0, 0.0, {1.0, -2.0}}), 0.0);
  EXPECT_THROW(reflect(Polynomial::monomial(3), 2), InvalidArgument);
}

TEST(Polynomial, ReflectIsAnInvolution) {
  Gen g(2);
  for (int t = 0; t < 100; ++t) {
    const int m = g.integer(0, 12);
    const Polynomial p = g.poly(m);
    EXPECT_EQ(coeff_error(reflect(reflect(p, m), m), p), 0.0);
  }
}

TEST(Polynomial, ReflectIsUnimodularOnTheCircle) {
  Gen g(3);
  for (int t = 0; t < 50; ++t) {
    const int m = g.integer(1, 6);
    const Polynomial p = g.poly(m);
    for (int k = 0; k < 16; ++k) {
      const Complex z = std::polar(1.0, kTwoPi * g.uniform());
      EXPECT_NEAR(std::abs(reflect(p, m)(z)), std::abs(p(z)), 1e-12 * std::max(1.0, p.max_abs()) * (m + 1));
    }
  }
}

TEST(Polynomial, TaylorSectionExamples) {
  const UnimodularPoint one(1.0);
  const Polynomial z2 = Polynomial::monomial(2);
  EXPECT_EQ(coeff_error(taylor_section(z2, one, 1), Polynomial{1.0}), 0.0);
  EXPECT_EQ(coeff_error(taylor_section(z2, one, 2), Polynomial{-1.0, 2.0}), 0.0);
  const Polynomial small{1.0, 2.0, 3.0};
  EXPECT_LE(coeff_error(taylor_section(small, UnimodularPoint(I), 3), small), 1e-14);
}

TEST(Polynomial, TaylorSectionLeavesADivisibleDifference) {
  Gen g(4);
  for (int t = 0; t < 300; ++t) {
    const int m = g.integer(1, 3);
    const Polynomial f = g.poly(20);
    const UnimodularPoint l = g.point();
    const DivRem qr = divrem(f - taylor_section(f, l, m), Polynomial::linear_power(l.value(), m));
    EXPECT_LE(qr.remainder.norm(), 1e-10 * f.norm()) << "trial " << t;
  }
}

// Long division by the expanded (z - lambda)^m loses accuracy with the degree;
// synthetic division at lambda does not.
TEST(Polynomial, TaylorSplitStaysAccurateAtHighDegree) {
  Gen g(5);
  for (int t = 0; t < 200; ++t) {
    const int m = g.integer(1, 4);
    const Polynomial f = g.poly_exact(30);
    const UnimodularPoint l = g.point();
    const TaylorSplit s = taylor_split(f - taylor_section(f, l, m), l.value(), m);
    double rem = 0.0;
    for (const Complex& c : s.taylor) rem = std::max(rem, std::abs(c));
    EXPECT_LE(rem, 1e-10 * f.norm());
    const TaylorSplit full = taylor_split(f, l.value(), m);
    EXPECT_LE(coeff_error(taylor_section(f, l, m) + Polynomial::linear_power(l.value(), m) * full.quotient, f),
              1e-10 * f.norm());
  }
}

TEST(Rational, TaylorCoefficientExamples) {
  const auto geo = taylor_coeffs(RationalFunction(Polynomial{1.0}, Polynomial{1.0, -1.0}), 3);
  ASSERT_EQ(geo.size(), 4u);
  for (const Complex& c : geo) EXPECT_NEAR(std::abs(c - 1.0), 0.0, 1e-15);

  const auto sq = taylor_coeffs(RationalFunction(Polynomial{1.0}, Polynomial{1.0, -2.0, 1.0}), 3);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(sq[static_cast<std::size_t>(k)] - Complex(k + 1.0)), 0.0, 1e-14);

  const auto z = taylor_coeffs(RationalFunction::from_polynomial(Polynomial::monomial(1)), 2);
  EXPECT_EQ(z, (std::vector<Complex>{0.0, 1.0, 0.0}));

  EXPECT_THROW(taylor_coeffs(RationalFunction(Polynomial{1.0}, Polynomial{0.0, 1.0}), 3), InvalidArgument);
}

TEST(Rational, TaylorTimesDenominatorReproducesNumerator) {
  Gen g(6);
  for (int t = 0; t < 100; ++t) {
    std::vector<Complex> poles(static_cast<std::size_t>(g.integer(1, 5)));
    for (Complex& p : poles) p = std::polar(g.uniform(1.2, 4.0), kTwoPi * g.uniform());
    const Polynomial den = Polynomial::from_roots(poles, g.cnormal());
    const Polynomial num = g.poly(6);
    if (num.is_zero()) continue;
    const RationalFunction f(num, den);
    const int n = 20;
    const std::vector<Complex> c = taylor_coeffs(f, n);
    const Polynomial back = Polynomial(std::vector<Complex>(c.begin(), c.end())) * den;
    const double scale = std::max(num.max_abs(), 1.0);
    for (int k = 0; k <= n; ++k) EXPECT_NEAR(std::abs(back[k] - num[k]), 0.0, 1e-12 * scale) << k;
  }
}

TEST(Rational, BoundaryMultiplePoleCoefficientsAreAccurate) {
  // (1 - z)^-4 has coefficients C(k + 3, 3).
  const std::vector<Complex> c = taylor_coeffs(RationalFunction(Polynomial{1.0}, pow(Polynomial{1.0, -1.0}, 4)), 200);
  for (int k = 0; k <= 200; ++k) {
    const double exact = (k + 1.0) * (k + 2.0) * (k + 3.0) / 6.0;
    EXPECT_LE(std::abs(c[static_cast<std::size_t>(k)] - exact), 1e-12 * exact) << k;
  }
}

TEST(Rational, PoleClassification) {
  EXPECT_EQ(RationalFunction(Polynomial{1.0}, Polynomial{2.0, -1.0}).pole_class(), PoleClass::OutsideClosedDisk);
  EXPECT_EQ(RationalFunction(Polynomial{1.0}, Polynomial{1.0, -1.0}).pole_class(), PoleClass::BoundaryOnly);
  EXPECT_EQ(RationalFunction(Polynomial{1.0}, Polynomial{-1.0, 0.0, 0.0, 1.0}).pole_class(), PoleClass::BoundaryOnly);
  EXPECT_EQ(RationalFunction(Polynomial{1.0}, Polynomial{1.0, -1.0} * Polynomial{3.0, -1.0}).pole_class(),
            PoleClass::Mixed);
  EXPECT_EQ(RationalFunction::from_polynomial(Polynomial{1.0, 2.0}).pole_class(), PoleClass::OutsideClosedDisk);
  EXPECT_THROW(RationalFunction(Polynomial{-1.0, 1.0}, Polynomial{-1.0, 0.0, 1.0}), InvalidArgument);
  EXPECT_THROW(RationalFunction(Polynomial{1.0}, Polynomial{}), InvalidArgument);
}

TEST(Roots, Examples) {
  const double a = testing::kAlpha;
  std::vector<Complex> r = find_roots(Polynomial{1.0, -3.0, 1.0}).roots;
  std::sort(r.begin(), r.end(), [](Complex x, Complex y) { return std::abs(x) < std::abs(y); });
  EXPECT_NEAR(std::abs(r[0] - a), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(r[1] - 1.0 / a), 0.0, 1e-14);

  r = find_roots(Polynomial{1.0, 0.0, 1.0}).roots;
  std::sort(r.begin(), r.end(), [](Complex x, Complex y) { return x.imag() > y.imag(); });
  EXPECT_NEAR(std::abs(r[0] - I), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(r[1] + I), 0.0, 1e-14);

  r = find_roots(Polynomial{4.0, -4.0, 1.0}).roots;
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(std::abs(r[0] - 2.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r[1] - 2.0), 0.0, 1e-12);

  EXPECT_THROW(find_roots(Polynomial{3.0}), InvalidArgument);
}

TEST(Roots, MultipleBoundaryRootsMergeToTheirCentroid) {
  for (int m = 2; m <= 5; ++m) {
    const Complex l = std::polar(1.0, 0.7);
    const RootSet rs = find_roots(Polynomial::linear_power(l, m));
    ASSERT_EQ(static_cast<int>(rs.roots.size()), m);
    for (const Complex& z : rs.roots) EXPECT_LE(std::abs(z - l), 1e-12) << "m=" << m;
  }
}

TEST(Roots, DistinctCloseRootsStaySeparate) {
  const std::vector<Complex> roots{1.0, 1.0 + 1e-5};
  const RootSet rs = find_roots(Polynomial::from_roots(roots));
  std::vector<double> re;
  for (const Complex& z : rs.roots) re.push_back(z.real());
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(re[0], 1.0, 1e-9);
  EXPECT_NEAR(re[1], 1.0 + 1e-5, 1e-9);
}

TEST(Roots, ReconstructionReproducesMonicInput) {
  Gen g(7);
  for (int t = 0; t < 100; ++t) {
    const Polynomial p = g.poly_exact(g.integer(1, 20));
    const Complex lead = p[p.degree()];
    const RootSet rs = find_roots(p);
    ASSERT_EQ(static_cast<int>(rs.roots.size()), p.degree());
    const Polynomial back = Polynomial::from_roots(rs.roots);
    const Polynomial monic = p * (1.0 / lead);
    EXPECT_LE(coeff_error(back, monic), 1e-8 * monic.max_abs()) << "trial " << t;
  }
}

TEST(Trig, AbsSquaredMatchesPointwiseModulus) {
  Gen g(8);
  for (int t = 0; t < 30; ++t) {
    const Polynomial p = g.poly(10);
    const TrigPolynomial v = TrigPolynomial::abs_squared(p);
    const std::vector<double> s = v.sample(64);
    for (int k = 0; k < 64; ++k) {
      const double exact = std::norm(p(std::polar(1.0, kTwoPi * k / 64)));
      EXPECT_NEAR(s[static_cast<std::size_t>(k)], exact, 1e-12 * std::max(1.0, exact));
      EXPECT_NEAR(v(kTwoPi * k / 64), exact, 1e-12 * std::max(1.0, exact));
    }
  }
}

}  // namespace
}  // namespace hblab
