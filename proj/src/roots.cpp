// SPDX-License-Identifier: Apache-2.0

#include "hblab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hblab/error.hpp"

namespace hblab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 2000;
// A k-fold root scatters Aberth iterates over about eps^(1/k); grouping is
// only a proposal, the vanishing-Taylor test below decides.
constexpr double kClusterRadius = 1e-2;
constexpr double kClusterAccept = 16.0;  // in units of (degree + 1) eps

struct Eval {
  Complex value;
  Complex deriv;
  double scale;  // sum |a_k| |z|^k, the Horner rounding-error scale
};

Eval horner(std::span<const Complex> a, Complex z) {
  Complex p{};
  Complex dp{};
  double s = 0.0;
  const double az = std::abs(z);
  for (std::size_t k = a.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
    s = s * az + std::abs(a[k]);
  }
  return {p, dp, s};
}

std::vector<Complex> initial_guesses(std::span<const Complex> a) {
  const std::size_t n = a.size() - 1;
  // Geometric mean of the root moduli, |a_0 / a_n|^{1/n}.
  double radius = std::pow(std::abs(a.front()) / std::abs(a.back()), 1.0 / static_cast<double>(n));
  if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1.0;
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius, kTwoPi * static_cast<double>(k) / static_cast<double>(n) + 0.4);
  return z;
}

void aberth(std::span<const Complex> a, std::vector<Complex>& z) {
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  for (int it = 0; it < kMaxIterations; ++it) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Eval e = horner(a, z[i]);
      if (std::abs(e.value) <= 4.0 * kEps * e.scale) {
        done[i] = true;
        continue;
      }
      all = false;
      const Complex ratio = e.value / e.deriv;
      Complex s{};
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      Complex w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      z[i] -= w;
      if (std::abs(w) <= kEps * std::abs(z[i])) done[i] = true;
    }
    if (all) return;
  }
  throw NumericalError("root finder did not converge");
}

void newton_polish(std::span<const Complex> a, Complex& z) {
  for (int it = 0; it < 3; ++it) {
    const Eval e = horner(a, z);
    if (e.deriv == Complex{}) return;
    const Complex next = z - e.value / e.deriv;
    if (std::abs(horner(a, next).value) < std::abs(e.value))
      z = next;
    else
      return;
  }
}

// Taylor coefficients of a at c, and the same for |a| at |c| (error scale).
void shifted(std::span<const Complex> a, Complex c, int count, std::vector<Complex>& t,
             std::vector<double>& scale) {
  std::vector<Complex> w(a.begin(), a.end());
  std::vector<double> ws(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) ws[k] = std::abs(a[k]);
  const double ac = std::abs(c);
  t.clear();
  scale.clear();
  for (int j = 0; j < count && !w.empty(); ++j) {
    for (std::size_t k = w.size() - 1; k-- > 0;) {
      w[k] += c * w[k + 1];
      ws[k] += ac * ws[k + 1];
    }
    t.push_back(w.front());
    scale.push_back(ws.front());
    w.erase(w.begin());
    ws.erase(ws.begin());
  }
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

void merge_clusters(std::span<const Complex> a, std::vector<Complex>& z) {
  const std::size_t n = z.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(z[i] - z[j]) <= kClusterRadius * std::max(1.0, std::abs(z[i])))
        parent[find_root(parent, i)] = find_root(parent, j);

  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find_root(parent, i)].push_back(i);

  std::vector<Complex> t;
  std::vector<double> scale;
  for (const auto& g : groups) {
    if (g.size() < 2) continue;
    Complex c{};
    for (std::size_t i : g) c += z[i];
    c /= static_cast<double>(g.size());
    const int k = static_cast<int>(g.size());
    // A k-fold root is a simple root of the (k-1)-th derivative.
    for (int it = 0; it < 8; ++it) {
      shifted(a, c, k + 1, t, scale);
      if (t.size() < static_cast<std::size_t>(k + 1) || t[k] == Complex{}) break;
      const Complex step = t[k - 1] / (static_cast<double>(k) * t[k]);
      c -= step;
      if (std::abs(step) <= kEps * std::abs(c)) break;
    }
    // A k-fold root at c makes the first k Taylor coefficients vanish to
    // rounding.
    shifted(a, c, k, t, scale);
    const double accept = kClusterAccept * static_cast<double>(a.size()) * kEps;
    bool ok = t.size() == g.size();
    for (std::size_t j = 0; ok && j < t.size(); ++j)
      ok = std::abs(t[j]) <= accept * scale[j];
    if (ok)
      for (std::size_t i : g) z[i] = c;
  }
}

}  // namespace

RootSet find_roots(const Polynomial& p) {
  if (p.degree() < 1) throw InvalidArgument("find_roots: polynomial must have degree >= 1");
  const auto coeffs = p.coeffs();

  // Exact zero roots first.
  std::size_t zeros = 0;
  while (zeros < coeffs.size() && coeffs[zeros] == Complex{}) ++zeros;
  const std::span<const Complex> a = coeffs.subspan(zeros);

  RootSet out;
  out.roots.assign(zeros, Complex{});
  if (a.size() >= 2) {
    std::vector<Complex> z = initial_guesses(a);
    aberth(a, z);
    merge_clusters(a, z);
    // Polish roots that are not part of a merged cluster.
    for (std::size_t i = 0; i < z.size(); ++i) {
      bool isolated = true;
      for (std::size_t j = 0; j < z.size() && isolated; ++j)
        if (j != i && z[j] == z[i]) isolated = false;
      if (isolated) newton_polish(a, z[i]);
    }
    out.roots.insert(out.roots.end(), z.begin(), z.end());
  }

  double worst_ratio = 0.0;
  const double maxc = p.max_abs();
  for (const Complex& r : out.roots) {
    const Eval e = horner(coeffs, r);
    out.residual = std::max(out.residual, std::abs(e.value));
    worst_ratio = std::max(worst_ratio, std::abs(e.value) / std::max(maxc, e.scale));
  }
  if (worst_ratio > 1e-8) throw NumericalError("find_roots: residual above 1e-8 after refinement");
  return out;
}

}  // namespace hblab
