// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <string>
#include <vector>

#include "hblab/kernels.hpp"
#include "support.hpp"

namespace hblab {
namespace {

using testing::Gen;
namespace k = kernels;

std::vector<Complex> random_vector(Gen& g, int n) {
  std::vector<Complex> v(static_cast<std::size_t>(n));
  for (Complex& x : v) x = g.cnormal();
  return v;
}

TEST(Kernels, BackendNames) {
  EXPECT_EQ(k::backend_name(k::Backend::Scalar), "scalar");
  EXPECT_EQ(k::backend_name(k::Backend::Avx2), "avx2");
  EXPECT_TRUE(k::backend_available(k::Backend::Scalar));
  EXPECT_TRUE(k::backend_available(k::active_backend()));
}

TEST(Kernels, ScalarReferenceValues) {
  const std::vector<Complex> a{{1, 2}, {3, -1}};
  const std::vector<Complex> b{{0, 1}, {2, 2}};
  // (1+2i)(-i) + (3-i)(2-2i) = (2 - i) + (4 - 8i)
  EXPECT_EQ(k::scalar::cdot(a, b), Complex(6, -9));
  EXPECT_EQ(k::scalar::sum_abs2(a), 15.0);
  const std::vector<Complex> pts{2.0, Complex(0, 1)};
  std::vector<Complex> out(2);
  k::scalar::horner_batch(std::vector<Complex>{1.0, 1.0, 1.0}, pts, out);
  EXPECT_EQ(out[0], Complex(7.0));
  EXPECT_EQ(out[1], Complex(0.0, 1.0));
}

TEST(Kernels, Avx2MatchesScalar) {
  if (!k::backend_available(k::Backend::Avx2)) GTEST_SKIP() << "AVX2 not available on this machine";
  Gen g(601);
  for (int t = 0; t < 300; ++t) {
    const int n = g.integer(0, 70);
    const std::vector<Complex> a = random_vector(g, n);
    const std::vector<Complex> b = random_vector(g, n + g.integer(0, 3));
    double scale = 1.0;
    for (int i = 0; i < n; ++i) scale += std::abs(a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)]);
    EXPECT_LE(std::abs(k::avx2::cdot(a, b) - k::scalar::cdot(a, b)), 1e-14 * scale) << "n=" << n;
    const double s = k::scalar::sum_abs2(a);
    EXPECT_LE(std::abs(k::avx2::sum_abs2(a) - s), 1e-14 * (1.0 + s));

    const std::vector<Complex> coeffs = random_vector(g, g.integer(0, 30));
    std::vector<Complex> pts(static_cast<std::size_t>(g.integer(0, 37)));
    for (Complex& z : pts) z = g.disk(1.0);
    std::vector<Complex> x(pts.size()), y(pts.size());
    k::scalar::horner_batch(coeffs, pts, x);
    k::avx2::horner_batch(coeffs, pts, y);
    double cs = 1.0;
    for (const Complex& c : coeffs) cs += std::abs(c);
    for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_LE(std::abs(x[i] - y[i]), 1e-13 * cs);
  }
}

TEST(Kernels, DispatchFollowsTheEnvironment) {
  const char* env = std::getenv("HBLAB_KERNELS");
  if (env != nullptr && std::string(env) == "scalar") {
    EXPECT_EQ(k::active_backend(), k::Backend::Scalar);
  } else if (k::backend_available(k::Backend::Avx2)) {
    EXPECT_EQ(k::active_backend(), k::Backend::Avx2);
  } else {
    EXPECT_EQ(k::active_backend(), k::Backend::Scalar);
  }
}

TEST(Kernels, DispatchedEntryPointsAgreeWithScalar) {
  Gen g(602);
  const std::vector<Complex> a = random_vector(g, 33);
  const std::vector<Complex> b = random_vector(g, 33);
  EXPECT_LE(std::abs(k::cdot(a, b) - k::scalar::cdot(a, b)), 1e-13);
  EXPECT_LE(std::abs(k::sum_abs2(a) - k::scalar::sum_abs2(a)), 1e-13);
}

}  // namespace
}  // namespace hblab
