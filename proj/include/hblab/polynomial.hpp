// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "hblab/types.hpp"

namespace hblab {

/// Dense complex polynomial in z, ascending coefficients. The zero polynomial
/// is the empty coefficient list. Trailing coefficients with modulus at most
/// 1e-13 times the largest coefficient modulus are dropped on construction.
class Polynomial {
 public:
  static constexpr double kTrimRelative = 1e-13;

  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  static Polynomial constant(Complex c);
  static Polynomial monomial(int k, Complex c = 1.0);
  /// (z - root)^m
  static Polynomial linear_power(Complex root, int m);
  /// leading * prod (z - roots[k])
  static Polynomial from_roots(std::span<const Complex> roots, Complex leading = 1.0);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::span<const Complex> coeffs() const noexcept { return c_; }
  /// Coefficient of z^k; zero outside the stored range.
  Complex operator[](int k) const noexcept;
  Complex operator()(Complex z) const noexcept;

  double max_abs() const noexcept;
  /// l2 norm of the coefficient vector, i.e. the H^2 norm.
  double norm() const noexcept;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(Complex s);

 private:
  std::vector<Complex> c_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Complex s, const Polynomial& p);
Polynomial operator*(const Polynomial& p, Complex s);

Polynomial derivative(const Polynomial& p, int order = 1);
/// Polynomial whose coefficients are the conjugates of p's.
Polynomial conj_coeffs(const Polynomial& p);
Polynomial pow(const Polynomial& p, int n);

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

/// f = q*d + rem with deg rem < deg d. Throws InvalidArgument when d == 0.
DivRem divrem(const Polynomial& f, const Polynomial& d);

/// z^m conj(p(1/conj z)): coefficient k is conj(p_{m-k}). Requires deg p <= m.
Polynomial reflect(const Polynomial& p, int m);

/// Coefficients t_j = f^(j)(at)/j!, j < count, by repeated synthetic division.
std::vector<Complex> taylor_shift_coeffs(const Polynomial& f, Complex at, int count);

/// f = sum_{j<m} taylor[j] (z - at)^j + (z - at)^m quotient.
struct TaylorSplit {
  std::vector<Complex> taylor;
  Polynomial quotient;
};
/// m synthetic divisions by (z - at); the quotient is read off directly, so no
/// cancellation against the expanded section occurs.
TaylorSplit taylor_split(const Polynomial& f, Complex at, int m);

/// T_{m-1}(f, lambda): the degree < m Taylor polynomial of f at lambda,
/// expanded in powers of z.
Polynomial taylor_section(const Polynomial& f, UnimodularPoint lambda, int m);

/// prod_j (1 - conj(lambda_j) z)
Polynomial boundary_factor(std::span<const UnimodularPoint> lambdas);

double max_coeff_distance(const Polynomial& a, const Polynomial& b);

/// Laurent polynomial sum_{j=lo}^{hi} c_j z^j.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int min_index, std::vector<Complex> coeffs);

  int min_index() const noexcept { return lo_; }
  int max_index() const noexcept { return lo_ + static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Complex operator[](int j) const noexcept;
  /// Requires z != 0 when min_index < 0.
  Complex operator()(Complex z) const;

 private:
  int lo_ = 0;
  std::vector<Complex> c_;
};

/// Hermitian-symmetric Laurent polynomial v(e^{it}) = sum_{|j|<=M} c_j e^{ijt}
/// with c_{-j} = conj(c_j); real-valued on the circle. Stores c_0..c_M.
class TrigPolynomial {
 public:
  TrigPolynomial() = default;
  /// Nonnegative-index coefficients c_0..c_M; c_0 must be real up to 1e-12
  /// relative (its imaginary part is dropped).
  explicit TrigPolynomial(std::vector<Complex> nonnegative);

  /// |p(e^{it})|^2 as exact autocorrelation sums of p's coefficients.
  static TrigPolynomial abs_squared(const Polynomial& p);

  int bandwidth() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Complex coeff(int j) const noexcept;
  double max_abs_coeff() const noexcept;
  /// v(e^{it})
  double operator()(double t) const noexcept;
  /// Evaluate the Laurent form at z (z != 0). Real on |z| = 1.
  Complex at(Complex z) const;
  /// w(z) = z^M v(z), an analytic polynomial of degree 2M.
  Polynomial analytic_shift() const;
  LaurentPolynomial laurent() const;

  /// v at `samples` uniformly spaced angles 2*pi*k/samples.
  std::vector<double> sample(int samples) const;

  friend TrigPolynomial operator+(const TrigPolynomial& a, const TrigPolynomial& b);

 private:
  std::vector<Complex> c_;
};

}  // namespace hblab
