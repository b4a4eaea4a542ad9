// SPDX-License-Identifier: Apache-2.0

#include "hblab/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/special_functions/legendre.hpp>

#include "hblab/error.hpp"
#include "hblab/kernels.hpp"

namespace hblab {

namespace {

constexpr double kPoleClusterTol = 1e-6;
constexpr int kValidationPoints = 6;
constexpr double kGradingPower = 6.0;

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Gauss-Legendre rule mapped to [0, 1].
void gauss_legendre01(int n, std::vector<double>& x, std::vector<double>& w) {
  const std::vector<double> pos = boost::math::legendre_p_zeros<double>(n);
  x.clear();
  w.clear();
  auto push = [&](double t) {
    const double d = boost::math::legendre_p_prime(n, t);
    x.push_back(0.5 * (1.0 + t));
    w.push_back(1.0 / ((1.0 - t * t) * d * d));
  };
  for (auto it = pos.rbegin(); it != pos.rend(); ++it)
    if (*it != 0.0) push(-*it);
  for (double t : pos) push(t);
}

// Sigmoidal map of [0, 2pi] onto itself whose first p - 1 derivatives vanish
// at both ends.
struct Grading {
  double p;

  double v(double s) const {
    const double t = (std::numbers::pi - s) / std::numbers::pi;
    return (1.0 / p - 0.5) * t * t * t - t / p + 0.5;
  }
  double dv(double s) const {
    const double t = (std::numbers::pi - s) / std::numbers::pi;
    return (-3.0 * (1.0 / p - 0.5) * t * t + 1.0 / p) / std::numbers::pi;
  }
  double map(double s) const {
    const double a = std::pow(v(s), p);
    const double b = std::pow(v(kTwoPi - s), p);
    return kTwoPi * a / (a + b);
  }
  double derivative(double s) const {
    const double vs = v(s);
    const double vr = v(kTwoPi - s);
    const double a = std::pow(vs, p);
    const double b = std::pow(vr, p);
    const double da = p * std::pow(vs, p - 1.0) * dv(s);
    const double db = -p * std::pow(vr, p - 1.0) * dv(kTwoPi - s);
    return kTwoPi * (da * b - a * db) / ((a + b) * (a + b));
  }
};

// Single boundary pole location shared by every pole of h.
UnimodularPoint common_boundary_pole(const RationalFunction& h) {
  const std::span<const Complex> poles = h.poles();
  Complex mean{};
  for (const Complex& z : poles) mean += z;
  mean /= static_cast<double>(poles.size());
  for (const Complex& z : poles)
    if (std::abs(z - mean) > kPoleClusterTol)
      throw InvalidArgument("a2_norm_series: poles are not a single point");
  if (std::abs(std::abs(mean) - 1.0) > kPoleClusterTol)
    throw InvalidArgument("a2_norm_series: pole is not on the unit circle");
  return UnimodularPoint(mean / std::abs(mean));
}

// Newton form of the interpolant through (x_i, y_i).
struct NewtonInterpolant {
  std::vector<double> x;
  std::vector<Complex> c;

  NewtonInterpolant(std::vector<double> xs, std::vector<Complex> ys) : x(std::move(xs)), c(std::move(ys)) {
    const std::size_t n = x.size();
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = n - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (x[i] - x[i - j]);
  }
  Complex operator()(double t) const {
    Complex v{};
    for (std::size_t i = c.size(); i-- > 0;) v = v * (t - x[i]) + c[i];
    return v;
  }
};

}  // namespace

double DirichletDecomposition::reconstruction_residual(const Polynomial& f) const {
  return max_coeff_distance(f, section + Polynomial::linear_power(lambda.value(), m) * g);
}

DirichletDecomposition decompose(const Polynomial& f, UnimodularPoint lambda, int m) {
  if (m < 1) throw InvalidArgument("decompose: m must be positive");
  DirichletDecomposition d;
  d.lambda = lambda;
  d.m = m;
  d.section = taylor_section(f, lambda, m);
  d.g = taylor_split(f, lambda.value(), m).quotient;
  return d;
}

double dirichlet_m(const Polynomial& f, UnimodularPoint lambda, int m) {
  const double n = decompose(f, lambda, m).g.norm();
  return n * n;
}

double dm_norm(const Polynomial& f, UnimodularPoint lambda, int m) {
  const double n = f.norm();
  return n * n + dirichlet_m(f, lambda, m);
}

BergmanMoment bergman_moment(int k, int m) {
  if (k < 0 || m < 1) throw InvalidArgument("bergman_moment: need k >= 0 and m >= 1");
  // prod_{j=1}^{2m-1} j / (k + j), then / (k + 2m)
  double v = 1.0;
  for (int j = 1; j < 2 * m; ++j) v *= static_cast<double>(j) / static_cast<double>(k + j);
  v /= static_cast<double>(k + 2 * m);
  return {k, m, v};
}

double a2_norm_series(const RationalFunction& h, int m, double tol) {
  if (m < 1) throw InvalidArgument("a2_norm_series: m must be positive");
  if (h.num().is_zero()) return 0.0;

  if (h.is_polynomial()) {
    const int d = h.num().degree();
    const std::vector<Complex> c = taylor_coeffs(h, d);
    double s = 0.0;
    for (int k = 0; k <= d; ++k) s += std::norm(c[static_cast<std::size_t>(k)]) * bergman_moment(k, m).value;
    return s;
  }

  const UnimodularPoint lambda = common_boundary_pole(h);
  const int k0 = std::max(0, h.num().degree() - h.den().degree() + 1);
  const int last = k0 + m + kValidationPoints - 1;
  const std::vector<Complex> c = taylor_coeffs(h, last);

  // y_k = lambda^k hhat_k is a polynomial in k of degree < m for k >= k0.
  std::vector<double> xs;
  std::vector<Complex> ys;
  std::vector<Complex> y(static_cast<std::size_t>(last + 1));
  double scale = 0.0;
  for (int k = k0; k <= last; ++k) {
    y[static_cast<std::size_t>(k)] = ipow(lambda.value(), k) * c[static_cast<std::size_t>(k)];
    scale = std::max(scale, std::abs(y[static_cast<std::size_t>(k)]));
    if (k < k0 + m) {
      xs.push_back(k);
      ys.push_back(y[static_cast<std::size_t>(k)]);
    }
  }
  const NewtonInterpolant q(std::move(xs), std::move(ys));
  for (int k = k0 + m; k <= last; ++k)
    if (std::abs(q(k) - y[static_cast<std::size_t>(k)]) > tol * scale)
      throw InvalidArgument("a2_norm_series: coefficients grow faster than k^(m-1); pole order exceeds m");

  double head = 0.0;
  for (int k = 0; k < k0; ++k) head += std::norm(c[static_cast<std::size_t>(k)]) * bergman_moment(k, m).value;

  // |Q(k)|^2 = sum_j beta_j (k+1)...(k+j), j <= 2m-2, solved from the nodes
  // k = -1, ..., -(2m-1) where the basis is lower triangular.
  const int nb = 2 * m - 1;
  auto rising = [](int j, double k) {
    double r = 1.0;
    for (int l = 1; l <= j; ++l) r *= k + l;
    return r;
  };
  std::vector<double> beta(static_cast<std::size_t>(nb));
  for (int i = 1; i <= nb; ++i) {
    double v = std::norm(q(-i));
    for (int j = 0; j < i - 1; ++j) v -= beta[static_cast<std::size_t>(j)] * rising(j, -i);
    beta[static_cast<std::size_t>(i - 1)] = v / rising(i - 1, -i);
  }
  // sum_{k >= k0} (k+1)...(k+j) B(k+1, 2m)
  //   = (2m-1)! / ((n-1) (k0+j+1) ... (k0+j+n-1)),  n = 2m - j >= 2
  const double fm = factorial(2 * m - 1);
  double tail = 0.0;
  for (int j = 0; j < nb; ++j) {
    const int n = 2 * m - j;
    double den = n - 1;
    for (int l = 0; l <= n - 2; ++l) den *= k0 + j + 1 + l;
    tail += beta[static_cast<std::size_t>(j)] * fm / den;
  }
  return head + tail;
}

double a2_norm_quadrature(const RationalFunction& h, int m, int radial_nodes, int angular_nodes) {
  if (m < 1 || radial_nodes < 1 || angular_nodes < 1)
    throw InvalidArgument("a2_norm_quadrature: m and node counts must be positive");
  if (h.num().is_zero()) return 0.0;

  bool graded = false;
  double theta0 = 0.0;
  for (const Complex& z : h.poles()) {
    if (std::abs(std::abs(z) - 1.0) <= kPoleClusterTol) {
      graded = true;
      theta0 = std::arg(z);
      break;
    }
  }

  const double ds = kTwoPi / angular_nodes;
  std::vector<double> theta(static_cast<std::size_t>(angular_nodes));
  std::vector<double> wt(static_cast<std::size_t>(angular_nodes));
  const Grading grading{kGradingPower};
  for (int i = 0; i < angular_nodes; ++i) {
    const double s = (i + 0.5) * ds;
    theta[static_cast<std::size_t>(i)] = graded ? theta0 + grading.map(s) : s;
    wt[static_cast<std::size_t>(i)] = graded ? grading.derivative(s) * ds : ds;
  }

  std::vector<double> rx, rw;
  gauss_legendre01(radial_nodes, rx, rw);

  const Complex lead = h.den()[h.den().degree()];
  std::vector<Complex> pts(theta.size()), nv(theta.size()), dv(theta.size());
  double total = 0.0;
  for (std::size_t a = 0; a < rx.size(); ++a) {
    const double r = rx[a];
    for (std::size_t i = 0; i < theta.size(); ++i) pts[i] = std::polar(r, theta[i]);
    kernels::horner_batch(h.num().coeffs(), pts, nv);
    // Factored denominator: the expanded form cancels catastrophically next
    // to a multiple boundary pole.
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Complex d = lead;
      for (const Complex& pole : h.poles()) d *= pts[i] - pole;
      dv[i] = d;
    }
    double ring = 0.0;
    for (std::size_t i = 0; i < theta.size(); ++i) ring += wt[i] * std::norm(nv[i] / dv[i]);
    total += rw[a] * r * std::pow(1.0 - r * r, 2 * m - 1) * ring;
  }
  return total / std::numbers::pi;
}

RationalFunction theorem1_integrand(const Polynomial& f, UnimodularPoint lambda, int m) {
  if (m < 1) throw InvalidArgument("theorem1_integrand: m must be positive");
  Polynomial num = derivative(f, m);
  int s = m;
  const Polynomial linear{-lambda.value(), 1.0};
  while (s > 0 && !num.is_zero()) {
    double size = 0.0;
    for (const Complex& c : num.coeffs()) size += std::abs(c);
    if (std::abs(num(lambda.value())) > 1e-11 * size) break;
    num = divrem(num, linear).quotient;
    --s;
  }
  return RationalFunction(std::move(num), Polynomial::linear_power(lambda.value(), s));
}

Theorem1Result theorem1_check(const Polynomial& f, UnimodularPoint lambda, int m, double tol) {
  Theorem1Result out;
  out.area_norm = a2_norm_series(theorem1_integrand(f, lambda, m), m, tol);
  out.scaled_dirichlet = factorial(2 * m - 1) * dirichlet_m(f, lambda, m);
  out.residual = std::abs(out.area_norm - out.scaled_dirichlet) / std::max(1.0, out.scaled_dirichlet);
  return out;
}

}  // namespace hblab
