#ifndef LFG_POLYNOMIAL_HPP
#define LFG_POLYNOMIAL_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lfg/bigint.hpp"

// Exact integer polynomials and the modular machinery behind the spectrum
// computation: characteristic polynomials and gcds are found modulo word-size
// primes and lifted by Chinese remaindering.
namespace lfg::poly {

/// Coefficients, lowest degree first; no trailing zeros except for the zero polynomial.
using int_poly = std::vector<big_count>;
using mod_poly = std::vector<std::uint64_t>;

inline void trim(int_poly &p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}
inline void trim(mod_poly &p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const int_poly &p) {
  return (p.size() == 1 && p[0] == 0) || p.empty() ? -1 : static_cast<int>(p.size()) - 1;
}

inline int_poly derivative(const int_poly &p) {
  if (p.size() <= 1) return {big_count(0)};
  int_poly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * static_cast<unsigned long long>(k);
  trim(d);
  return d;
}

/// Division by a monic polynomial over Z; exact integer quotient and remainder.
inline std::pair<int_poly, int_poly> divmod_monic(int_poly a, const int_poly &b) {
  const int db = degree(b);
  if (db < 0 || b.back() != 1) throw std::invalid_argument("divmod_monic: divisor must be monic");
  if (degree(a) < db) return {{big_count(0)}, a};
  int_poly q(a.size() - b.size() + 1, big_count(0));
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    const big_count c = a[k];
    if (c == 0) continue;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  a.resize(static_cast<std::size_t>(db > 0 ? db : 1));
  trim(a);
  trim(q);
  return {q, a};
}

inline bool is_zero(const int_poly &p) { return degree(p) < 0; }

// ---------------------------------------------------------------- modular arithmetic

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Primes just below 2^62, in decreasing order; generated once.
inline const std::vector<std::uint64_t> &moduli() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = (1ull << 62) - 1; out.size() < 256; c -= 2)
      if (is_prime(c)) out.push_back(c);
    return out;
  }();
  return primes;
}

inline std::uint64_t reduce(const big_count &c, std::uint64_t p) {
  big_count r = c % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

inline mod_poly reduce(const int_poly &a, std::uint64_t p) {
  mod_poly out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = reduce(a[k], p);
  trim(out);
  return out;
}

/// Monic gcd over GF(p); the zero polynomial is represented by an empty vector.
inline mod_poly gcd_mod(mod_poly a, mod_poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
      const std::uint64_t c = mul_mod(a.back(), inv, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - mul_mod(c, b[j], p)) % p;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const std::uint64_t inv = inv_mod(a.back(), p);
    for (auto &c : a) c = mul_mod(c, inv, p);
  }
  return a;
}

/// Incremental Chinese remaindering of coefficient vectors into the symmetric range.
class crt_accumulator {
 public:
  void add(const std::vector<std::uint64_t> &residues, std::uint64_t p) {
    if (modulus_ == 0) {
      values_.assign(residues.begin(), residues.end());
      modulus_ = p;
      return;
    }
    if (residues.size() != values_.size()) throw std::logic_error("crt: length mismatch");
    const std::uint64_t m_mod_p = reduce(modulus_, p);
    const std::uint64_t inv = inv_mod(m_mod_p, p);
    for (std::size_t k = 0; k < values_.size(); ++k) {
      const std::uint64_t cur = reduce(values_[k], p);
      const std::uint64_t t = mul_mod((residues[k] + p - cur) % p, inv, p);
      values_[k] += modulus_ * t;
    }
    modulus_ *= p;
  }

  const big_count &modulus() const { return modulus_; }

  /// Values mapped into (-M/2, M/2].
  int_poly symmetric() const {
    int_poly out(values_.begin(), values_.end());
    const big_count half = modulus_ / 2;
    for (auto &v : out) {
      v %= modulus_;
      if (v < 0) v += modulus_;
      if (v > half) v -= modulus_;
    }
    trim(out);
    return out;
  }

 private:
  std::vector<big_count> values_;
  big_count modulus_ = 0;
};

/// Monic gcd over Z of a monic polynomial a and any b (Gauss: such a gcd has
/// integer coefficients). Modular images are lifted until the candidate
/// divides both inputs exactly.
inline int_poly monic_gcd(const int_poly &a, const int_poly &b) {
  if (degree(a) < 0 || a.back() != 1) throw std::invalid_argument("monic_gcd: first argument must be monic");
  if (is_zero(b)) return a;
  int best_degree = degree(a) + 1;
  crt_accumulator acc;
  for (std::size_t attempt = 0; attempt < moduli().size(); ++attempt) {
    const std::uint64_t p = moduli()[attempt];
    auto bp = reduce(b, p);
    if (bp.size() != b.size()) continue;  // leading coefficient vanished mod p
    const auto g = gcd_mod(reduce(a, p), bp, p);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg > best_degree) continue;  // unlucky prime
    if (dg < best_degree) {
      best_degree = dg;
      acc = crt_accumulator{};
    }
    acc.add(g, p);
    const auto cand = acc.symmetric();
    if (degree(cand) == best_degree && cand.back() == 1 && is_zero(divmod_monic(a, cand).second) &&
        is_zero(divmod_monic(b, cand).second))
      return cand;
  }
  throw std::runtime_error("monic_gcd: modular lifting did not converge");
}

// ---------------------------------------------------------------- characteristic polynomial

/// det(x I - A) over GF(p) by reduction to upper Hessenberg form.
inline mod_poly charpoly_mod(std::vector<std::vector<std::uint64_t>> h, std::uint64_t p) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    const std::uint64_t inv = inv_mod(h[j + 1][j], p);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h[i][j] == 0) continue;
      const std::uint64_t u = mul_mod(h[i][j], inv, p);
      for (std::size_t c = 0; c < n; ++c) h[i][c] = (h[i][c] + p - mul_mod(u, h[j + 1][c], p)) % p;
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = (h[r][j + 1] + mul_mod(u, h[r][i], p)) % p;
    }
  }
  // chi_{k+1} = (x - h_kk) chi_k - sum_{i<k} h_ik (prod_{m=i+1..k} h_{m,m-1}) chi_i
  std::vector<mod_poly> chi(n + 1);
  chi[0] = {1};
  for (std::size_t k = 0; k < n; ++k) {
    mod_poly next(k + 2, 0);
    for (std::size_t d = 0; d < chi[k].size(); ++d) {
      next[d + 1] = (next[d + 1] + chi[k][d]) % p;
      next[d] = (next[d] + p - mul_mod(h[k][k], chi[k][d], p)) % p;
    }
    std::uint64_t prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod = mul_mod(prod, h[i + 1][i], p);
      if (prod == 0) break;
      const std::uint64_t c = mul_mod(h[i][k], prod, p);
      if (c == 0) continue;
      for (std::size_t d = 0; d < chi[i].size(); ++d) next[d] = (next[d] + p - mul_mod(c, chi[i][d], p)) % p;
    }
    chi[k + 1] = std::move(next);
  }
  return chi[n];
}

/// det(x I - A) over Z for a 0/1 matrix, lifted past the Hadamard coefficient bound.
inline int_poly charpoly(const std::vector<std::vector<int>> &a) {
  const std::size_t n = a.size();
  // |coefficient of x^{n-k}| <= C(n,k) k^{k/2} for 0/1 entries.
  double bound_bits = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double lc = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    bound_bits = std::max(bound_bits, (lc + 0.5 * k * std::log(double(k))) / std::log(2.0));
  }
  crt_accumulator acc;
  std::size_t i = 0;
  while (acc.modulus() == 0 || boost::multiprecision::msb(acc.modulus()) < bound_bits + 2) {
    if (i == moduli().size()) throw std::runtime_error("charpoly: ran out of moduli");
    const std::uint64_t p = moduli()[i++];
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m[r][c] = static_cast<std::uint64_t>(a[r][c]) % p;
    auto cp = charpoly_mod(std::move(m), p);
    cp.resize(n + 1, 0);
    acc.add(cp, p);
  }
  return acc.symmetric();
}

// ---------------------------------------------------------------- real roots

/// sign(p(a / 2^e)), exactly.
inline int sign_at(const int_poly &p, const big_count &a, unsigned e) {
  const int d = degree(p);
  if (d < 0) return 0;
  big_count acc = p[d];
  for (int k = d - 1; k >= 0; --k) acc = acc * a + (p[k] << (e * static_cast<unsigned>(d - k)));
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

/// Bound on |root| (Fujiwara), as a power of two exponent.
inline unsigned root_bound_log2(const int_poly &p) {
  const int d = degree(p);
  auto log2_abs = [](const big_count &c) {
    if (c == 0) return -1e300;
    big_count a = abs(c);
    const unsigned m = boost::multiprecision::msb(a);
    const unsigned shift = m > 52 ? m - 52 : 0;
    return std::log2(static_cast<double>(a >> shift)) + shift;
  };
  const double lead = log2_abs(p[d]);
  double best = 0;
  for (int k = 1; k <= d; ++k) {
    const double l = (log2_abs(p[d - k]) - lead) / k;
    best = std::max(best, l);
  }
  return static_cast<unsigned>(std::ceil(best + 1.0)) + 1;
}

/// Real roots of a square-free polynomial whose roots are all real, as dyadic
/// numerators at scale 2^-e (each within one unit of the true root), ascending.
/// Each root is bracketed between consecutive roots of the derivative.
inline std::vector<big_count> real_roots_dyadic(const int_poly &p, unsigned e, unsigned bound_log2) {
  const int d = degree(p);
  if (d <= 0) return {};
  const big_count lim = big_count(1) << (bound_log2 + e);
  std::vector<big_count> crit = real_roots_dyadic(derivative(p), e, bound_log2);
  if (static_cast<int>(crit.size()) != d - 1)
    throw std::runtime_error("polynomial has non-real or repeated roots");
  std::vector<big_count> ends;
  ends.reserve(d + 1);
  ends.push_back(-lim);
  for (auto &c : crit) ends.push_back(c);
  ends.push_back(lim);

  std::vector<big_count> roots;
  roots.reserve(d);
  for (int k = 0; k < d; ++k) {
    big_count lo = ends[k], hi = ends[k + 1];
    int slo = sign_at(p, lo, e), shi = sign_at(p, hi, e);
    if (slo == 0) {
      roots.push_back(lo);
      continue;
    }
    if (shi == 0) {
      roots.push_back(hi);
      continue;
    }
    if (slo == shi) {
      // hi sits up to one unit below the true critical point; the root may be in that gap.
      if (k + 1 < d && sign_at(p, hi + 1, e) != shi) {
        roots.push_back(hi);
        continue;
      }
      throw std::runtime_error("root isolation failed: no sign change in bracket");
    }
    while (hi - lo > 1) {
      const big_count mid = lo + (hi - lo) / 2;
      const int sm = sign_at(p, mid, e);
      if (sm == 0) {
        lo = hi = mid;
        break;
      }
      if (sm == slo)
        lo = mid;
      else
        hi = mid;
    }
    roots.push_back(lo);
  }
  return roots;
}

}  // namespace lfg::poly

#endif
