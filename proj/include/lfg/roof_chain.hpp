#ifndef LFG_ROOF_CHAIN_HPP
#define LFG_ROOF_CHAIN_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lfg/bigint.hpp"
#include "lfg/heap.hpp"
#include "lfg/rng.hpp"

namespace lfg {

enum class boundary { open, periodic };

inline boundary parse_boundary(const std::string &s) {
  if (s == "open") return boundary::open;
  if (s == "periodic") return boundary::periodic;
  throw std::invalid_argument("unknown boundary '" + s + "' (expected open|periodic)");
}

/// Roof indicator over columns 1..n stored 0-based; an entry is 0 or the
/// color (+1/-1) of the top cell. Semigroup states only use 0/1.
using roof_state = std::vector<std::int8_t>;

namespace detail {
inline std::int64_t neighbour(std::int64_t i, std::int64_t n, boundary b) {
  if (b == boundary::periodic) return ((i % n) + n) % n;
  return (i < 0 || i >= n) ? -1 : i;
}
}  // namespace detail

/// Empty string when no two adjacent columns are marked, else a description.
inline std::string roof_state_violation(const roof_state &eps, boundary b = boundary::open) {
  const auto n = static_cast<std::int64_t>(eps.size());
  for (std::int64_t i = 0; i < n; ++i) {
    if (eps[i] != 0 && eps[i] != 1 && eps[i] != -1) return "entry " + std::to_string(i + 1) + " is not 0/+1/-1";
    const auto j = detail::neighbour(i + 1, n, b);
    if (eps[i] != 0 && j >= 0 && j != i && eps[j] != 0)
      return "columns " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are both marked";
  }
  return {};
}

/// One transition of the roof chain when letter (r, sign) is applied.
/// Growth: column r becomes marked with the letter's color and its two
/// neighbours are cleared. In group mode a letter whose inverse sits on the
/// roof at r reduces the word; the chain then clears r only. The true roof
/// after a reduction can also gain neighbours of r, which is not a function
/// of the roof alone, so this rule is the local approximation of that step.
inline roof_state roof_chain_step(const roof_state &eps, std::uint32_t r, int sign, mode m,
                                  boundary b = boundary::open) {
  const auto n = static_cast<std::int64_t>(eps.size());
  if (n == 0) throw std::invalid_argument("roof_chain_step: empty state");
  if (r < 1 || r > n) throw std::invalid_argument("roof_chain_step: column " + std::to_string(r) + " out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("roof_chain_step: sign must be +1 or -1");
  if (m == mode::semigroup && sign != 1) throw std::invalid_argument("roof_chain_step: negative letter in semigroup mode");
  if (auto v = roof_state_violation(eps, b); !v.empty()) throw std::invalid_argument("roof_chain_step: " + v);
  if (m == mode::semigroup)
    for (auto e : eps)
      if (e < 0) throw std::invalid_argument("roof_chain_step: colored entry in semigroup mode");

  roof_state out = eps;
  const std::int64_t i = r - 1;
  if (m == mode::group && eps[i] == -sign) {
    out[i] = 0;
  } else {
    for (std::int64_t d : {-1, 1})
      if (auto j = detail::neighbour(i + d, n, b); j >= 0 && j != i) out[j] = 0;
    out[i] = static_cast<std::int8_t>(sign);
  }
  if (auto v = roof_state_violation(out, b); !v.empty()) throw std::logic_error("roof_chain_step produced " + v);
  return out;
}

inline std::size_t roof_state_size(const roof_state &eps) {
  std::size_t s = 0;
  for (auto e : eps) s += e != 0;
  return s;
}

/// Exact one-step mean change of the roof size from a semigroup state under
/// a uniformly chosen column.
inline double roof_chain_expected_delta(const roof_state &eps, boundary b = boundary::open) {
  const auto n = static_cast<std::uint32_t>(eps.size());
  const auto before = static_cast<double>(roof_state_size(eps));
  double total = 0;
  for (std::uint32_t r = 1; r <= n; ++r)
    total += static_cast<double>(roof_state_size(roof_chain_step(eps, r, 1, mode::semigroup, b))) - before;
  return total / n;
}

struct chain_density {
  double density = 0;  // time average of #T / n after burn-in
  std::uint64_t samples = 0;
};

/// Runs the chain from the empty roof under uniform letters (n choices in
/// semigroup mode, 2n in group mode).
inline chain_density roof_chain_density(std::uint32_t n, std::uint64_t steps, std::uint64_t burn_in, std::uint64_t seed,
                                        mode m, boundary b) {
  if (n == 0) throw std::invalid_argument("roof chain: n must be >= 1");
  if (b == boundary::periodic && n < 3) throw std::invalid_argument("roof chain: periodic boundary needs n >= 3");
  if (burn_in >= steps) throw std::invalid_argument("roof chain: burn-in must be shorter than the run");
  counter_rng rng(seed, 0);
  roof_state eps(n, 0);
  std::int64_t size = 0;
  const std::uint32_t choices = m == mode::group ? 2 * n : n;
  chain_density out;
  double acc = 0;
  for (std::uint64_t t = 1; t <= steps; ++t) {
    const auto draw = rng.below(choices);
    const std::int64_t i = draw % n;
    const int sign = draw < n ? 1 : -1;
    // Same rules as roof_chain_step, applied in place without re-validation.
    if (m == mode::group && eps[i] == -sign) {
      eps[i] = 0;
      --size;
    } else {
      for (std::int64_t d : {-1, 1})
        if (auto j = detail::neighbour(i + d, n, b); j >= 0 && j != i && eps[j] != 0) {
          eps[j] = 0;
          --size;
        }
      if (eps[i] == 0) ++size;
      eps[i] = static_cast<std::int8_t>(sign);
    }
    if (t > burn_in) {
      acc += static_cast<double>(size);
      ++out.samples;
    }
  }
  out.density = acc / (static_cast<double>(out.samples) * n);
  return out;
}

struct roof_support_count {
  big_count count;
  double growth_ratio = 0;  // count(n) / count(n - 1); 0 for n = 1
};

/// Number of indicator vectors on n columns with no two adjacent ones, the
/// empty vector included; when colored each one carries one of two signs.
inline big_count roof_support_exhaustive(std::uint32_t n, bool colored) {
  if (n > 30) throw std::invalid_argument("roof_support_enumerate: n <= 30 required for exhaustive enumeration");
  // Depth-first over the uncolored supports; a colored support of size k
  // stands for 2^k signed vectors.
  std::uint64_t total = 0;
  std::function<void(std::uint32_t, std::uint32_t)> dfs = [&](std::uint32_t next, std::uint32_t ones) {
    total += colored ? (std::uint64_t{1} << ones) : 1;
    for (std::uint32_t i = next; i < n; ++i) dfs(i + 2, ones + 1);
  };
  dfs(0, 0);
  return big_count(total);
}

inline roof_support_count roof_support_enumerate(std::uint32_t n, bool colored) {
  if (n == 0) throw std::invalid_argument("roof_support_enumerate: n must be >= 1");
  roof_support_count out{roof_support_exhaustive(n, colored), 0.0};
  if (n > 1) {
    const auto prev = roof_support_exhaustive(n - 1, colored);
    out.growth_ratio = static_cast<double>(out.count) / static_cast<double>(prev);
  }
  return out;
}

}  // namespace lfg

#endif
