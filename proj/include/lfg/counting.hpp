#ifndef LFG_COUNTING_HPP
#define LFG_COUNTING_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "lfg/bigint.hpp"

namespace lfg {

/// Which object is being counted: the group, the positive semigroup, the
/// semigroup with f_i^2 = f_i, or the group with f_i^r = 1.
struct count_variant {
  enum class kind { group, semigroup, projective, restricted };

  kind k = kind::group;
  std::uint32_t r = 0;

  static count_variant group() { return {kind::group, 0}; }
  static count_variant semigroup() { return {kind::semigroup, 0}; }
  static count_variant projective() { return {kind::projective, 0}; }
  static count_variant restricted(std::uint32_t order) {
    if (order < 2) throw std::invalid_argument("restricted order r must be >= 2, got " + std::to_string(order));
    return {kind::restricted, order};
  }

  std::string name() const {
    switch (k) {
      case kind::group: return "group";
      case kind::semigroup: return "semigroup";
      case kind::projective: return "projective";
      case kind::restricted: return "restricted";
    }
    return "?";
  }

  friend bool operator==(const count_variant &, const count_variant &) = default;
};

inline count_variant parse_variant(const std::string &name, std::uint32_t r = 0) {
  if (name == "group") return count_variant::group();
  if (name == "semigroup") return count_variant::semigroup();
  if (name == "projective") return count_variant::projective();
  if (name == "restricted") return count_variant::restricted(r);
  throw std::invalid_argument("unknown variant '" + name + "' (expected group|semigroup|projective|restricted)");
}

/// 0/1 successor matrix of normal-form indices: j may follow i iff j = i-1 or j > i.
class transfer_matrix {
 public:
  explicit transfer_matrix(std::uint32_t n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
    if (n == 0) throw std::invalid_argument("transfer_matrix: n must be >= 1");
    for (std::uint32_t i = 1; i <= n; ++i)
      for (std::uint32_t j = 1; j <= n; ++j) a_[(i - 1) * n + (j - 1)] = (j + 1 == i || j > i) ? 1 : 0;
  }

  std::uint32_t size() const { return n_; }
  /// 1-based entry.
  int operator()(std::uint32_t i, std::uint32_t j) const { return a_.at((i - 1) * n_ + (j - 1)); }

  /// c * T + d * I over an exact ring.
  template <class T>
  square_matrix<T> affine(long c, long d) const {
    square_matrix<T> m(n_);
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = 0; j < n_; ++j) m(i, j) = T(c * a_[i * n_ + j] + (i == j ? d : 0));
    return m;
  }

 private:
  std::uint32_t n_;
  std::vector<std::uint8_t> a_;
};

/// Number of admissible index sequences of length s: <v, T^{s-1} v>.
inline big_count theta_exact(std::uint32_t n, std::uint32_t s) {
  if (s == 0) throw std::invalid_argument("theta_exact: s must be >= 1");
  return entry_sum(matrix_power(transfer_matrix(n).affine<big_count>(1, 0), s - 1));
}

/// theta_n(1..s_max) by repeated application of T; element [s-1] is theta_n(s).
inline std::vector<big_count> theta_sequence(std::uint32_t n, std::uint32_t s_max) {
  const auto t = transfer_matrix(n).affine<big_count>(1, 0);
  std::vector<big_count> v(n, big_count(1)), out;
  out.reserve(s_max);
  for (std::uint32_t s = 1; s <= s_max; ++s) {
    if (s > 1) v = t.apply(v);
    big_count total = 0;
    for (const auto &x : v) total += x;
    out.push_back(total);
  }
  return out;
}

/// Coefficients of the per-syllable generating function g_r(z) = sum_l c_l z^{l-1},
/// where c_l counts the nonzero residues mod r of geodesic length l.
inline std::vector<big_count> syllable_length_polynomial(std::uint32_t r) {
  if (r < 2) throw std::invalid_argument("restricted order r must be >= 2");
  const std::uint32_t half = r / 2;
  std::vector<big_count> g(half, big_count(2));  // lengths 1..half
  if (r % 2 == 0) g.back() = 1;                   // m and -m coincide
  return g;
}

/// Number of exponent tuples (m_1..m_s), each a nonzero class of Z/rZ, whose
/// geodesic lengths add up to K: [z^{K-s}] g_r(z)^s.
inline big_count restricted_syllable_count(std::uint32_t r, std::uint32_t K, std::uint32_t s) {
  if (r < 2) throw std::invalid_argument("restricted order r must be >= 2");
  if (s == 0 || s > K) throw std::invalid_argument("restricted_syllable_count: need 1 <= s <= K");
  const auto g = syllable_length_polynomial(r);
  const std::size_t deg = K - s;
  std::vector<big_count> acc(deg + 1, big_count(0));
  acc[0] = 1;
  for (std::uint32_t t = 0; t < s; ++t) {
    std::vector<big_count> next(deg + 1, big_count(0));
    for (std::size_t i = 0; i <= deg; ++i) {
      if (acc[i] == 0) continue;
      for (std::size_t j = 0; j < g.size() && i + j <= deg; ++j) next[i + j] += acc[i] * g[j];
    }
    acc = std::move(next);
  }
  return acc[deg];
}

/// N_r(K, s) for all 1 <= s <= K <= K_max; table[K][s] (index 0 unused).
inline std::vector<std::vector<big_count>> restricted_syllable_table(std::uint32_t r, std::uint32_t K_max) {
  const auto g = syllable_length_polynomial(r);
  std::vector<std::vector<big_count>> table(K_max + 1, std::vector<big_count>(K_max + 1, big_count(0)));
  // power[i] = [z^i] g^s, advanced one s at a time.
  std::vector<big_count> power(K_max + 1, big_count(0));
  power[0] = 1;
  for (std::uint32_t s = 1; s <= K_max; ++s) {
    std::vector<big_count> next(K_max + 1, big_count(0));
    for (std::size_t i = 0; i + s <= K_max; ++i) {
      if (power[i] == 0) continue;
      for (std::size_t j = 0; j < g.size() && i + j + s <= K_max; ++j) next[i + j] += power[i] * g[j];
    }
    power = std::move(next);
    for (std::uint32_t K = s; K <= K_max; ++K) table[K][s] = power[K - s];
  }
  return table;
}

inline void check_count_args(std::uint32_t n, std::uint32_t K) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  if (K == 0) throw std::invalid_argument("K must be >= 1");
}

/// Exact number of elements of reduced length K.
inline big_count count_words(std::uint32_t n, std::uint32_t K, count_variant variant) {
  check_count_args(n, K);
  const transfer_matrix t(n);
  switch (variant.k) {
    case count_variant::kind::group:
      return 2 * entry_sum(matrix_power(t.affine<big_count>(2, 1), K - 1));
    case count_variant::kind::semigroup:
      return entry_sum(matrix_power(t.affine<big_count>(1, 1), K - 1));
    case count_variant::kind::projective:
      return theta_exact(n, K);
    case count_variant::kind::restricted: {
      if (variant.r < 2) throw std::invalid_argument("restricted order r must be >= 2");
      const auto theta = theta_sequence(n, K);
      big_count total = 0;
      for (std::uint32_t s = 1; s <= K; ++s) total += restricted_syllable_count(variant.r, K, s) * theta[s - 1];
      return total;
    }
  }
  throw std::logic_error("unreachable");
}

/// V(n, 1..K_max) in one pass; element [K-1] is V(n, K).
inline std::vector<big_count> count_series(std::uint32_t n, std::uint32_t K_max, count_variant variant) {
  check_count_args(n, K_max);
  const transfer_matrix t(n);
  std::vector<big_count> out;
  out.reserve(K_max);
  auto iterate = [&](const square_matrix<big_count> &m, long scale) {
    std::vector<big_count> v(n, big_count(1));
    for (std::uint32_t K = 1; K <= K_max; ++K) {
      if (K > 1) v = m.apply(v);
      big_count s = 0;
      for (const auto &x : v) s += x;
      out.push_back(scale * s);
    }
  };
  switch (variant.k) {
    case count_variant::kind::group: iterate(t.affine<big_count>(2, 1), 2); break;
    case count_variant::kind::semigroup: iterate(t.affine<big_count>(1, 1), 1); break;
    case count_variant::kind::projective: out = theta_sequence(n, K_max); break;
    case count_variant::kind::restricted: {
      const auto theta = theta_sequence(n, K_max);
      const auto table = restricted_syllable_table(variant.r, K_max);
      for (std::uint32_t K = 1; K <= K_max; ++K) {
        big_count total = 0;
        for (std::uint32_t s = 1; s <= K; ++s) total += table[K][s] * theta[s - 1];
        out.push_back(total);
      }
      break;
    }
  }
  return out;
}

/// Successive-ratio estimate log(V(K)/V(K-1)) of the logarithmic volume,
/// plus the whole sequence of ratios for K' = 2..K as a convergence trace.
struct volume_estimate {
  double log_ratio = 0;
  std::vector<double> successive;  // successive[i] is the ratio at K' = i + 2

  /// True when the ratios from K' = from onward never change direction;
  /// steps smaller than tol (rounding noise after convergence) are ignored.
  bool monotone_from(std::uint32_t from, double tol = 1e-13) const {
    if (from < 2) from = 2;
    int dir = 0;
    for (std::size_t i = from - 1; i < successive.size(); ++i) {
      const double d = successive[i] - successive[i - 1];
      if (std::abs(d) <= tol) continue;
      const int s = d > 0 ? 1 : -1;
      if (dir != 0 && s != dir) return false;
      dir = s;
    }
    return true;
  }
};

inline volume_estimate log_volume_estimate(std::uint32_t n, std::uint32_t K, count_variant variant) {
  if (K < 2) throw std::invalid_argument("log_volume_estimate: K must be >= 2");
  const auto counts = count_series(n, K, variant);
  volume_estimate est;
  est.successive.reserve(K - 1);
  for (std::uint32_t k = 2; k <= K; ++k) {
    if (counts[k - 2] == 0) throw std::domain_error("zero count at K = " + std::to_string(k - 1));
    est.successive.push_back(static_cast<double>(log_ratio(counts[k - 1], counts[k - 2])));
  }
  est.log_ratio = est.successive.back();
  return est;
}

/// Large-n asymptote C (2^n / n^3) 3^{s-1}, C = 16 pi^2 / log^4(2/e). Diagnostic only.
inline double theta_asymptotic(std::uint32_t n, std::uint32_t s) {
  if (n < 4) throw std::invalid_argument("theta_asymptotic: n must be >= 4");
  if (s == 0) throw std::invalid_argument("theta_asymptotic: s must be >= 1");
  const double l = std::log(2.0 / std::numbers::e);
  const double c = 16.0 * std::numbers::pi * std::numbers::pi / (l * l * l * l);
  return c * std::exp(n * std::log(2.0) - 3.0 * std::log(double(n)) + (s - 1.0) * std::log(3.0));
}

}  // namespace lfg

#endif
