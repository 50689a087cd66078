#ifndef LFG_ORACLE_HPP
#define LFG_ORACLE_HPP

// Brute-force ground truth at small scale. Nothing here uses the transfer
// matrix: elements are enumerated as canonical heaps and deduplicated.

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <map>
#include <span>
#include <type_traits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lfg/bigint.hpp"
#include "lfg/counting.hpp"
#include "lfg/heap.hpp"

namespace lfg {

class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct oracle_budget {
  std::uint64_t max_states = 4'000'000;  // distinct elements held at once
  std::uint32_t max_depth = 12;          // radius or number of steps
};

namespace detail {

inline std::string key_string(const colored_heap &h) {
  const auto k = canonical_key(h);
  return {k.begin(), k.end()};
}

inline std::uint32_t read32(const std::string &s, std::size_t &pos) {
  if (pos + 4 > s.size()) throw std::invalid_argument("canonical key truncated");
  std::uint32_t v = 0;
  for (int b = 0; b < 4; ++b) v |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(s[pos + b])) << (8 * b);
  pos += 4;
  return v;
}

inline std::uint32_t read32_n(const std::string &key) {
  std::size_t pos = 0;
  return read32(key, pos);
}

/// Heap of a graph-product element whose vertex groups are given by an
/// exponent rule: one syllable per cell, merged with the column top when the
/// top is on the roof. Used for the projective and r-restricted counts.
class syllable_heap {
 public:
  syllable_heap(std::uint32_t n, count_variant v) : v_(v), cols_(n + 2) {}

  /// Right-multiplies by f_i^sign.
  void push(std::uint32_t i, int sign) {
    auto &c = cols_[i];
    const bool on_roof = !c.empty() && top(i) > top(i - 1) && top(i) > top(i + 1);
    if (on_roof) {
      auto &e = c.back().second;
      switch (v_.k) {
        case count_variant::kind::projective: return;  // f^2 = f
        case count_variant::kind::restricted: {
          const auto r = static_cast<std::int64_t>(v_.r);
          e = ((e + sign) % r + r) % r;
          if (e == 0) c.pop_back();
          return;
        }
        default: e += sign; if (e == 0) c.pop_back(); return;
      }
    }
    const std::uint32_t level = 1 + std::max({top(i - 1), top(i), top(i + 1)});
    std::int64_t e = sign;
    if (v_.k == count_variant::kind::restricted) e = ((e % v_.r) + v_.r) % v_.r;
    c.emplace_back(level, e);
  }

  std::string key() const {
    std::string out;
    auto put = [&out](std::uint64_t v, int bytes) {
      for (int b = 0; b < bytes; ++b) out.push_back(static_cast<char>(v >> (8 * b)));
    };
    put(cols_.size() - 2, 4);
    for (std::size_t i = 1; i + 1 < cols_.size(); ++i) {
      put(cols_[i].size(), 4);
      for (const auto &[level, e] : cols_[i]) {
        put(level, 4);
        put(static_cast<std::uint64_t>(e), 8);
      }
    }
    return out;
  }

 private:
  std::uint32_t top(std::uint32_t i) const { return cols_[i].empty() ? 0 : cols_[i].back().first; }

  count_variant v_;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> cols_;
};

}  // namespace detail

/// Inverse of canonical_key.
inline colored_heap heap_from_key(std::span<const std::uint8_t> key, mode m) {
  const std::string s(key.begin(), key.end());
  std::size_t pos = 0;
  const auto n = detail::read32(s, pos);
  std::vector<std::vector<cell>> cols(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto count = detail::read32(s, pos);
    for (std::uint32_t c = 0; c < count; ++c) {
      const auto level = detail::read32(s, pos);
      if (pos >= s.size()) throw std::invalid_argument("canonical key truncated");
      const auto color = static_cast<std::uint8_t>(s[pos++]);
      if (color != 0x01 && color != 0xFF) throw std::invalid_argument("canonical key: bad color byte");
      cols[i].push_back({level, static_cast<std::int8_t>(color == 0x01 ? 1 : -1)});
    }
  }
  if (pos != s.size()) throw std::invalid_argument("canonical key has trailing bytes");
  return colored_heap::from_columns(n, m, cols);
}

struct ball_census {
  std::uint32_t n = 0;
  count_variant variant;
  std::uint32_t radius = 0;
  std::vector<big_count> counts;                             // counts[K], K = 0..radius
  std::unordered_map<std::string, std::uint32_t> elements;  // key bytes -> length
};

/// Breadth-first closure of the identity under right multiplication by the
/// generators (and their inverses in the group variants), deduplicated by
/// canonical heap. Layer K holds the elements of word length K.
inline ball_census enumerate_ball(std::uint32_t n, std::uint32_t radius, count_variant variant,
                                  const oracle_budget &budget = {}) {
  if (n == 0) throw std::invalid_argument("enumerate_ball: n must be >= 1");
  if (variant.k == count_variant::kind::restricted && variant.r < 2)
    throw std::invalid_argument("restricted order r must be >= 2");
  if (radius > budget.max_depth)
    throw budget_exceeded("enumerate_ball: radius " + std::to_string(radius) + " exceeds budget " +
                          std::to_string(budget.max_depth));
  ball_census out{n, variant, radius, {big_count(1)}, {}};

  const bool inverses = variant.k == count_variant::kind::group || variant.k == count_variant::kind::restricted;
  std::vector<letter> gens;
  for (std::uint32_t i = 1; i <= n; ++i) {
    gens.push_back({i, 1});
    if (inverses) gens.push_back({i, -1});
  }

  auto run = [&](auto frontier, auto extend) {
    out.elements.emplace(frontier.front().first, 0);
    for (std::uint32_t K = 1; K <= radius; ++K) {
      decltype(frontier) next;
      for (const auto &[key, state] : frontier) {
        for (const auto &g : gens) {
          auto s = state;
          extend(s, g);
          auto k = [&] {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, colored_heap>) return detail::key_string(s);
            else return s.key();
          }();
          if (out.elements.emplace(k, K).second) {
            next.emplace_back(std::move(k), std::move(s));
            if (out.elements.size() > budget.max_states)
              throw budget_exceeded("enumerate_ball: more than " + std::to_string(budget.max_states) + " elements");
          }
        }
      }
      out.counts.push_back(big_count(next.size()));
      frontier = std::move(next);
    }
  };

  if (variant.k == count_variant::kind::group || variant.k == count_variant::kind::semigroup) {
    const mode m = variant.k == count_variant::kind::group ? mode::group : mode::semigroup;
    colored_heap e(n, m);
    std::vector<std::pair<std::string, colored_heap>> frontier{{detail::key_string(e), e}};
    run(std::move(frontier), [](colored_heap &h, letter g) { h.push(g); });
  } else {
    detail::syllable_heap e(n, variant);
    std::vector<std::pair<std::string, detail::syllable_heap>> frontier{{e.key(), e}};
    run(std::move(frontier), [](detail::syllable_heap &h, letter g) { h.push(g.index, g.sign); });
  }
  return out;
}

/// Law of the uniform walk after N steps: path counts #L(w) per element
/// (keyed by canonical key bytes), over denominator (2n)^N or n^N.
struct exact_distribution {
  struct weight {
    big_count paths;
    std::uint32_t length = 0;
  };

  std::uint32_t n = 0;
  lfg::mode mode = lfg::mode::group;
  std::uint32_t steps = 0;
  big_count denominator;
  std::map<std::string, weight> states;

  big_rational probability(const std::string &key) const {
    const auto it = states.find(key);
    return it == states.end() ? big_rational(0) : big_rational(it->second.paths, denominator);
  }
};

struct walk_moments {
  std::uint32_t steps = 0;
  big_rational drift;  // E K(w_N) / N
  double entropy = 0;  // H(mu^N) / N
};

namespace detail {

using path_layer = std::unordered_map<std::string, big_count>;

inline void check_walk_args(std::uint32_t n, std::uint32_t N, const oracle_budget &budget) {
  if (n == 0) throw std::invalid_argument("exact walk: n must be >= 1");
  if (N == 0) throw std::invalid_argument("exact walk: N must be >= 1");
  if (N > budget.max_depth)
    throw budget_exceeded("exact walk: N = " + std::to_string(N) + " exceeds budget " + std::to_string(budget.max_depth));
}

/// Backward recomputation of every path count from the previous layer:
/// group - sum over all 2n letters g of #L(w g); semigroup - sum over the
/// roof columns of #L(w with that top cell removed).
inline void check_path_recursion(const path_layer &prev, const path_layer &cur, std::uint32_t n, mode m) {
  for (const auto &[key, paths] : cur) {
    const auto h = heap_from_key({reinterpret_cast<const std::uint8_t *>(key.data()), key.size()}, m);
    big_count total = 0;
    auto add = [&](const colored_heap &u) {
      if (auto it = prev.find(key_string(u)); it != prev.end()) total += it->second;
    };
    for (std::uint32_t i = 1; i <= n; ++i) {
      if (m == mode::group) {
        for (int s : {1, -1}) add(push_letter(h, {i, s}));
      } else if (h.in_roof(i)) {
        auto u = h;
        u.pop(i);
        add(u);
      }
    }
    if (total != paths) throw std::logic_error("path-count recursion fails on a state of length " + std::to_string(h.size()));
  }
}

inline walk_moments layer_moments(const path_layer &layer, std::uint32_t N, const big_count &denominator) {
  big_count weighted_length = 0;
  real50 sum_clogc = 0;
  for (const auto &[key, paths] : layer) {
    // cell count = (key bytes - 4 - 4n) / 5
    weighted_length += paths * big_count((key.size() - 4 - 4 * read32_n(key)) / 5);
    sum_clogc += real50(paths) * boost::multiprecision::log(real50(paths));
  }
  const real50 d(denominator);
  const real50 h = boost::multiprecision::log(d) - sum_clogc / d;
  return {N, big_rational(weighted_length, denominator * N), static_cast<double>(h / N)};
}

}  // namespace detail

/// Runs the path-count recursion for N = 1..N_max, calling visit(N, layer,
/// denominator) after each step. The recursion is verified on every layer.
template <class Visit>
void exact_walk_layers(std::uint32_t n, std::uint32_t N_max, mode m, const oracle_budget &budget, Visit visit) {
  detail::check_walk_args(n, N_max, budget);
  const std::uint32_t choices = m == mode::group ? 2 * n : n;
  detail::path_layer layer{{detail::key_string(colored_heap(n, m)), big_count(1)}};
  big_count denominator = 1;
  for (std::uint32_t N = 1; N <= N_max; ++N) {
    detail::path_layer next;
    for (const auto &[key, paths] : layer) {
      const auto h = heap_from_key({reinterpret_cast<const std::uint8_t *>(key.data()), key.size()}, m);
      for (std::uint32_t i = 1; i <= n; ++i)
        for (int s : {1, -1}) {
          if (m == mode::semigroup && s < 0) continue;
          next[detail::key_string(push_letter(h, {i, s}))] += paths;
        }
      if (next.size() > budget.max_states)
        throw budget_exceeded("exact walk: more than " + std::to_string(budget.max_states) + " states at N = " +
                              std::to_string(N));
    }
    detail::check_path_recursion(layer, next, n, m);
    denominator *= choices;
    layer = std::move(next);
    visit(N, layer, denominator);
  }
}

inline exact_distribution compute_exact_distribution(std::uint32_t n, std::uint32_t N, mode m,
                                                     const oracle_budget &budget = {}) {
  exact_distribution out;
  out.n = n;
  out.mode = m;
  out.steps = N;
  exact_walk_layers(n, N, m, budget, [&](std::uint32_t step, const detail::path_layer &layer, const big_count &d) {
    if (step != N) return;
    out.denominator = d;
    for (const auto &[key, paths] : layer)
      out.states.emplace(key, exact_distribution::weight{paths, static_cast<std::uint32_t>(
                                                                    (key.size() - 4 - 4 * n) / 5)});
  });
  return out;
}

/// Exact drift and entropy for every N = 1..N_max in one pass.
inline std::vector<walk_moments> exact_walk_series(std::uint32_t n, std::uint32_t N_max, mode m,
                                                   const oracle_budget &budget = {}) {
  std::vector<walk_moments> out;
  exact_walk_layers(n, N_max, m, budget, [&](std::uint32_t N, const detail::path_layer &layer, const big_count &d) {
    out.push_back(detail::layer_moments(layer, N, d));
  });
  return out;
}

/// H(mu^N) / N.
inline double exact_entropy(std::uint32_t n, std::uint32_t N, mode m, const oracle_budget &budget = {}) {
  return exact_walk_series(n, N, m, budget).back().entropy;
}

/// E K(w_N) / N as an exact rational.
inline big_rational exact_drift(std::uint32_t n, std::uint32_t N, mode m, const oracle_budget &budget = {}) {
  return exact_walk_series(n, N, m, budget).back().drift;
}

/// Number of s-tuples of nonzero classes of Z/rZ whose geodesic lengths
/// min(m, r - m) add up to K, by direct enumeration of the classes.
inline big_count brute_restricted(std::uint32_t r, std::uint32_t K, std::uint32_t s) {
  if (r < 2) throw std::invalid_argument("brute_restricted: r must be >= 2");
  if (r > 7 || K > 12) throw budget_exceeded("brute_restricted: supported for r <= 7, K <= 12");
  if (s == 0 || s > K) throw std::invalid_argument("brute_restricted: need 1 <= s <= K");
  std::uint64_t count = 0;
  // remaining: length still to distribute; slots: syllables still to choose.
  auto rec = [&](auto &self, std::uint32_t remaining, std::uint32_t slots) -> void {
    if (slots == 0) {
      count += remaining == 0;
      return;
    }
    for (std::uint32_t m = 1; m < r; ++m) {
      const std::uint32_t len = std::min(m, r - m);
      if (len + (slots - 1) <= remaining) self(self, remaining - len, slots - 1);
    }
  };
  rec(rec, K, s);
  return big_count(count);
}

}  // namespace lfg

#endif
