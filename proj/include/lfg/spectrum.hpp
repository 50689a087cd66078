#ifndef LFG_SPECTRUM_HPP
#define LFG_SPECTRUM_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "lfg/counting.hpp"
#include "lfg/polynomial.hpp"

namespace lfg {

/// det(x I - T_n) with exact integer coefficients, lowest degree first.
inline poly::int_poly characteristic_polynomial(std::uint32_t n) {
  const transfer_matrix t(n);
  std::vector<std::vector<int>> a(n, std::vector<int>(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) a[i][j] = t(i + 1, j + 1);
  return poly::charpoly(a);
}

struct eigenvalue {
  double value = 0;
  std::uint32_t multiplicity = 1;
};

/// Distinct eigenvalues of T_n with algebraic multiplicities, descending.
///
/// T_n is not diagonalizable (-1 is a defective eigenvalue for n >= 4), so the
/// characteristic polynomial is split exactly into square-free layers
/// p = s_1 s_2^2 s_3^3 ... and the real roots of each layer are bracketed and
/// bisected with exact dyadic arithmetic.
inline std::vector<eigenvalue> spectrum_clusters(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("spectrum: n must be >= 1");
  constexpr unsigned scale = 48;  // roots to within 2^-48

  // gcd chain g_0 = p, g_{k+1} = gcd(g_k, g_k'); q_k = g_k / g_{k+1} has the
  // roots of multiplicity > k, and s_k = q_{k-1} / q_k those of multiplicity exactly k.
  std::vector<poly::int_poly> g{characteristic_polynomial(n)};
  while (poly::degree(g.back()) > 0) g.push_back(poly::monic_gcd(g.back(), poly::derivative(g.back())));
  std::vector<poly::int_poly> q;
  for (std::size_t k = 0; k + 1 < g.size(); ++k) q.push_back(poly::divmod_monic(g[k], g[k + 1]).first);
  q.push_back({big_count(1)});

  std::vector<eigenvalue> out;
  for (std::size_t k = 1; k < q.size(); ++k) {
    const auto layer = poly::divmod_monic(q[k - 1], q[k]).first;
    if (poly::degree(layer) <= 0) continue;
    for (const auto &a : poly::real_roots_dyadic(layer, scale, poly::root_bound_log2(layer)))
      out.push_back({std::ldexp(static_cast<double>(a), -static_cast<int>(scale)), static_cast<std::uint32_t>(k)});
  }
  std::sort(out.begin(), out.end(), [](const eigenvalue &a, const eigenvalue &b) { return a.value > b.value; });
  std::uint32_t total = 0;
  for (const auto &e : out) total += e.multiplicity;
  if (total != n) throw std::runtime_error("spectrum: multiplicities do not add up to n");
  return out;
}

/// All n eigenvalues of T_n, repeated by multiplicity, descending.
inline std::vector<double> spectrum_numeric(std::uint32_t n) {
  std::vector<double> out;
  out.reserve(n);
  for (const auto &e : spectrum_clusters(n)) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

/// det(T_n - lambda I) by the three-term recursion
/// a_k = -(lambda+1)(a_{k-1} + a_{k-2}), a_0 = 1, a_1 = -lambda.
inline double charpoly_eval(std::uint32_t n, double lambda) {
  long double prev = 1.0L, cur = -static_cast<long double>(lambda);
  if (n == 0) return 1.0;
  const long double s = -(static_cast<long double>(lambda) + 1.0L);
  for (std::uint32_t k = 2; k <= n; ++k) {
    const long double next = s * (cur + prev);
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

/// Closed form (-1)^n (lambda+1)^{(n-1)/2} U_{n+1}(sqrt(lambda+1)/2) for lambda > -1,
/// with U_{n+1}(cos t) = sin((n+2)t)/sin t (and its hyperbolic continuation past lambda = 3).
inline double charpoly_chebyshev(std::uint32_t n, double lambda) {
  if (!(lambda > -1.0)) throw std::domain_error("charpoly_chebyshev: requires lambda > -1");
  const long double x = std::sqrt(static_cast<long double>(lambda) + 1.0L) / 2.0L;
  long double u;
  if (x < 1.0L) {
    const long double t = std::acos(x);
    u = std::sin((n + 2) * t) / std::sin(t);
  } else if (x == 1.0L) {
    u = n + 2;
  } else {
    const long double t = std::acosh(x);
    u = std::sinh((n + 2) * t) / std::sinh(t);
  }
  const long double sign = (n % 2 == 0) ? 1.0L : -1.0L;
  return static_cast<double>(sign * std::pow(static_cast<long double>(lambda) + 1.0L, (n - 1.0L) / 2.0L) * u);
}

/// 4 cos^2(pi k / (n + 2)) - 1: the roots of the closed form above.
inline double chebyshev_eigenvalue(std::uint32_t n, std::uint32_t k) {
  const double c = std::cos(std::numbers::pi * k / (n + 2.0));
  return 4.0 * c * c - 1.0;
}

/// 1 / p_k with the pole placement 4 cos^2(pi k / (n + 1)) - 1 of the
/// generating-function derivation. Kept as a diagnostic; it misses the true
/// spectrum at finite n (n = 2 gives 0 instead of 1).
inline double pole_eigenvalue(std::uint32_t n, std::uint32_t k) {
  const double c = std::cos(std::numbers::pi * k / (n + 1.0));
  return 4.0 * c * c - 1.0;
}

/// Perron root of T_n by power iteration, stopped when the Collatz-Wielandt
/// bracket min/max (T x)_i / x_i is narrower than tol. O(n) per iteration.
inline double dominant_eigenvalue(std::uint32_t n, double tol = 1e-13) {
  if (n == 0) throw std::invalid_argument("dominant_eigenvalue: n must be >= 1");
  if (n == 1) return 0.0;
  std::vector<long double> x(n, 1.0L), y(n);
  for (std::size_t iter = 0; iter < 50'000'000; ++iter) {
    long double suffix = 0;  // sum_{j > i} x_j
    for (std::size_t i = n; i-- > 0;) {
      y[i] = suffix + (i > 0 ? x[i - 1] : 0.0L);
      suffix += x[i];
    }
    long double lo = INFINITY, hi = 0, norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const long double r = y[i] / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      norm += y[i];
    }
    if (hi - lo <= tol * hi) return static_cast<double>((lo + hi) / 2);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  throw std::runtime_error("dominant_eigenvalue: power iteration did not converge");
}

/// Exact finite-n logarithmic volume log(2 lambda_max + 1) (group) or
/// log(lambda_max + 1) (semigroup).
inline double finite_volume(std::uint32_t n, count_variant variant) {
  const double lmax = dominant_eigenvalue(n);
  switch (variant.k) {
    case count_variant::kind::group: return std::log(2.0 * lmax + 1.0);
    case count_variant::kind::semigroup: return std::log(lmax + 1.0);
    case count_variant::kind::projective: return std::log(lmax);
    default: throw std::invalid_argument("finite_volume: unsupported variant " + variant.name());
  }
}

}  // namespace lfg

#endif
