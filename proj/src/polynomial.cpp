// SPDX-License-Identifier: Apache-2.0

#include "hblab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hblab/error.hpp"
#include "hblab/kernels.hpp"

namespace hblab {

namespace {

void require_finite(std::span<const Complex> c) {
  for (const Complex& x : c)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
      throw InvalidArgument("polynomial coefficient is not finite");
}

void trim(std::vector<Complex>& c) {
  double mx = 0.0;
  for (const Complex& x : c) mx = std::max(mx, std::abs(x));
  const double cut = Polynomial::kTrimRelative * mx;
  while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
}

}  // namespace

UnimodularPoint::UnimodularPoint(Complex value) : value_(value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) ||
      std::abs(std::abs(value) - 1.0) > 1e-12)
    throw InvalidArgument("point is not on the unit circle");
}

UnimodularPoint UnimodularPoint::from_turns(double turns) {
  const double t = kTwoPi * turns;
  return UnimodularPoint(Complex{std::cos(t), std::sin(t)});
}

UnimodularPoint UnimodularPoint::normalized(Complex value, double tol) {
  const double r = std::abs(value);
  if (!std::isfinite(r) || std::abs(r - 1.0) > tol)
    throw InvalidArgument("point modulus " + std::to_string(r) + " is not 1 within tolerance");
  return UnimodularPoint(value / r);
}

Polynomial::Polynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  require_finite(c_);
  trim(c_);
}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs)
    : Polynomial(std::vector<Complex>(coeffs)) {}

Polynomial Polynomial::constant(Complex c) { return Polynomial(std::vector<Complex>{c}); }

Polynomial Polynomial::monomial(int k, Complex c) {
  if (k < 0) throw InvalidArgument("negative monomial degree");
  std::vector<Complex> v(static_cast<std::size_t>(k) + 1, Complex{});
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_power(Complex root, int m) {
  if (m < 0) throw InvalidArgument("negative power");
  std::vector<Complex> v{1.0};
  for (int i = 0; i < m; ++i) {
    std::vector<Complex> next(v.size() + 1, Complex{});
    for (std::size_t k = 0; k < v.size(); ++k) {
      next[k + 1] += v[k];
      next[k] -= root * v[k];
    }
    v = std::move(next);
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots, Complex leading) {
  std::vector<Complex> v{leading};
  for (const Complex& z : roots) {
    std::vector<Complex> next(v.size() + 1, Complex{});
    for (std::size_t k = 0; k < v.size(); ++k) {
      next[k + 1] += v[k];
      next[k] -= z * v[k];
    }
    v = std::move(next);
  }
  return Polynomial(std::move(v));
}

Complex Polynomial::operator[](int k) const noexcept {
  if (k < 0 || k > degree()) return {};
  return c_[static_cast<std::size_t>(k)];
}

Complex Polynomial::operator()(Complex z) const noexcept {
  Complex acc{};
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
  return acc;
}

double Polynomial::max_abs() const noexcept {
  double mx = 0.0;
  for (const Complex& x : c_) mx = std::max(mx, std::abs(x));
  return mx;
}

double Polynomial::norm() const noexcept { return std::sqrt(kernels::sum_abs2(c_)); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  std::vector<Complex> v = c_;
  if (v.size() < o.c_.size()) v.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) v[k] += o.c_[k];
  *this = Polynomial(std::move(v));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  std::vector<Complex> v = c_;
  if (v.size() < o.c_.size()) v.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) v[k] -= o.c_[k];
  *this = Polynomial(std::move(v));
  return *this;
}

Polynomial& Polynomial::operator*=(Complex s) {
  std::vector<Complex> v = c_;
  for (Complex& x : v) x *= s;
  *this = Polynomial(std::move(v));
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r += b;
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r -= b;
  return r;
}

Polynomial operator-(const Polynomial& a) { return Complex{-1.0} * a; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  std::vector<Complex> v(ca.size() + cb.size() - 1, Complex{});
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j) v[i + j] += ca[i] * cb[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(Complex s, const Polynomial& p) {
  Polynomial r = p;
  r *= s;
  return r;
}

Polynomial operator*(const Polynomial& p, Complex s) { return s * p; }

Polynomial derivative(const Polynomial& p, int order) {
  if (order < 0) throw InvalidArgument("negative derivative order");
  std::vector<Complex> v(p.coeffs().begin(), p.coeffs().end());
  for (int o = 0; o < order && !v.empty(); ++o) {
    std::vector<Complex> d(v.size() - 1);
    for (std::size_t k = 1; k < v.size(); ++k) d[k - 1] = static_cast<double>(k) * v[k];
    v = std::move(d);
  }
  return Polynomial(std::move(v));
}

Polynomial conj_coeffs(const Polynomial& p) {
  std::vector<Complex> v(p.coeffs().begin(), p.coeffs().end());
  for (Complex& x : v) x = std::conj(x);
  return Polynomial(std::move(v));
}

Polynomial pow(const Polynomial& p, int n) {
  if (n < 0) throw InvalidArgument("negative power");
  Polynomial r = Polynomial::constant(1.0);
  for (int i = 0; i < n; ++i) r = r * p;
  return r;
}

DivRem divrem(const Polynomial& f, const Polynomial& d) {
  if (d.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const int df = f.degree();
  const int dd = d.degree();
  if (df < dd) return {Polynomial{}, f};
  std::vector<Complex> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<Complex> q(static_cast<std::size_t>(df - dd) + 1, Complex{});
  const Complex lead = d[dd];
  for (int k = df - dd; k >= 0; --k) {
    const Complex t = rem[static_cast<std::size_t>(k + dd)] / lead;
    q[static_cast<std::size_t>(k)] = t;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= t * d[j];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial reflect(const Polynomial& p, int m) {
  if (m < 0) throw InvalidArgument("reflect: negative order");
  if (p.degree() > m)
    throw InvalidArgument("reflect: degree " + std::to_string(p.degree()) + " exceeds m = " +
                          std::to_string(m));
  std::vector<Complex> v(static_cast<std::size_t>(m) + 1, Complex{});
  for (int k = 0; k <= m; ++k) v[static_cast<std::size_t>(k)] = std::conj(p[m - k]);
  return Polynomial(std::move(v));
}

TaylorSplit taylor_split(const Polynomial& f, Complex at, int m) {
  std::vector<Complex> work(f.coeffs().begin(), f.coeffs().end());
  TaylorSplit out;
  out.taylor.reserve(static_cast<std::size_t>(std::max(m, 0)));
  for (int j = 0; j < m; ++j) {
    if (work.empty()) {
      out.taylor.emplace_back();
      continue;
    }
    // Synthetic division by (z - at): remainder is the next Taylor coefficient.
    for (std::size_t k = work.size() - 1; k-- > 0;) work[k] += at * work[k + 1];
    out.taylor.push_back(work.front());
    work.erase(work.begin());
  }
  out.quotient = Polynomial(std::move(work));
  return out;
}

std::vector<Complex> taylor_shift_coeffs(const Polynomial& f, Complex at, int count) {
  return taylor_split(f, at, count).taylor;
}

Polynomial taylor_section(const Polynomial& f, UnimodularPoint lambda, int m) {
  if (m < 1) throw InvalidArgument("taylor_section: m must be positive");
  const Complex l = lambda.value();
  const std::vector<Complex> t = taylor_shift_coeffs(f, l, m);
  Polynomial section;
  for (int j = m; j-- > 0;) {
    // Horner in (z - lambda)
    section = section * Polynomial{-l, 1.0} + Polynomial::constant(t[static_cast<std::size_t>(j)]);
  }
  return section;
}

Polynomial boundary_factor(std::span<const UnimodularPoint> lambdas) {
  Polynomial q = Polynomial::constant(1.0);
  for (const UnimodularPoint& l : lambdas) q = q * Polynomial{1.0, -l.conj()};
  return q;
}

double max_coeff_distance(const Polynomial& a, const Polynomial& b) {
  const int n = std::max(a.degree(), b.degree());
  double d = 0.0;
  for (int k = 0; k <= n; ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

LaurentPolynomial::LaurentPolynomial(int min_index, std::vector<Complex> coeffs)
    : lo_(min_index), c_(std::move(coeffs)) {
  require_finite(c_);
}

Complex LaurentPolynomial::operator[](int j) const noexcept {
  const int k = j - lo_;
  if (k < 0 || k >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<std::size_t>(k)];
}

Complex LaurentPolynomial::operator()(Complex z) const {
  if (c_.empty()) return {};
  if (lo_ < 0 && z == Complex{}) throw InvalidArgument("Laurent polynomial evaluated at 0");
  Complex acc{};
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
  return acc * ipow(z, lo_);
}

TrigPolynomial::TrigPolynomial(std::vector<Complex> nonnegative) : c_(std::move(nonnegative)) {
  require_finite(c_);
  if (!c_.empty()) {
    double mx = 0.0;
    for (const Complex& x : c_) mx = std::max(mx, std::abs(x));
    if (std::abs(c_[0].imag()) > 1e-12 * std::max(mx, 1.0))
      throw InvalidArgument("trigonometric polynomial: c_0 must be real");
    c_[0] = c_[0].real();
    const double cut = Polynomial::kTrimRelative * mx;
    while (c_.size() > 1 && std::abs(c_.back()) <= cut) c_.pop_back();
    if (c_.size() == 1 && c_[0] == Complex{}) c_.clear();
  }
}

TrigPolynomial TrigPolynomial::abs_squared(const Polynomial& p) {
  const auto c = p.coeffs();
  std::vector<Complex> v(c.size());
  // c_j = sum_k p_{k+j} conj(p_k)
  for (std::size_t j = 0; j < c.size(); ++j) v[j] = kernels::cdot(c.subspan(j), c);
  return TrigPolynomial(std::move(v));
}

Complex TrigPolynomial::coeff(int j) const noexcept {
  const int a = j < 0 ? -j : j;
  if (a >= static_cast<int>(c_.size())) return {};
  const Complex c = c_[static_cast<std::size_t>(a)];
  return j < 0 ? std::conj(c) : c;
}

double TrigPolynomial::max_abs_coeff() const noexcept {
  double mx = 0.0;
  for (const Complex& x : c_) mx = std::max(mx, std::abs(x));
  return mx;
}

double TrigPolynomial::operator()(double t) const noexcept {
  if (c_.empty()) return 0.0;
  double v = c_[0].real();
  for (std::size_t j = 1; j < c_.size(); ++j) {
    const double a = static_cast<double>(j) * t;
    v += 2.0 * (c_[j].real() * std::cos(a) - c_[j].imag() * std::sin(a));
  }
  return v;
}

Complex TrigPolynomial::at(Complex z) const { return laurent()(z); }

Polynomial TrigPolynomial::analytic_shift() const {
  const int m = bandwidth();
  if (m < 0) return {};
  std::vector<Complex> w(static_cast<std::size_t>(2 * m) + 1);
  for (int j = -m; j <= m; ++j) w[static_cast<std::size_t>(j + m)] = coeff(j);
  return Polynomial(std::move(w));
}

LaurentPolynomial TrigPolynomial::laurent() const {
  const int m = bandwidth();
  if (m < 0) return {};
  std::vector<Complex> w(static_cast<std::size_t>(2 * m) + 1);
  for (int j = -m; j <= m; ++j) w[static_cast<std::size_t>(j + m)] = coeff(j);
  return LaurentPolynomial(-m, std::move(w));
}

std::vector<double> TrigPolynomial::sample(int samples) const {
  const int m = bandwidth();
  std::vector<double> out(static_cast<std::size_t>(samples), 0.0);
  if (m < 0 || samples <= 0) return out;
  std::vector<Complex> pts(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) pts[static_cast<std::size_t>(k)] = std::polar(1.0, kTwoPi * k / samples);
  const Polynomial w = analytic_shift();
  std::vector<Complex> vals(pts.size());
  kernels::horner_batch(w.coeffs(), pts, vals);
  for (std::size_t k = 0; k < pts.size(); ++k)
    out[k] = (vals[k] * std::polar(1.0, -kTwoPi * static_cast<double>((static_cast<long long>(k) * m) % samples) /
                                              samples))
                 .real();
  return out;
}

TrigPolynomial operator+(const TrigPolynomial& a, const TrigPolynomial& b) {
  std::vector<Complex> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j < a.c_.size()) v[j] += a.c_[j];
    if (j < b.c_.size()) v[j] += b.c_[j];
  }
  return TrigPolynomial(std::move(v));
}

}  // namespace hblab
