#ifndef LFG_NORMAL_FORM_HPP
#define LFG_NORMAL_FORM_HPP

#include <cstdint>
#include <cstdlib>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lfg/heap.hpp"

namespace lfg {

struct syllable {
  std::uint32_t index = 1;
  std::int64_t exponent = 1;

  friend bool operator==(const syllable &, const syllable &) = default;
};

/// Index k may be followed by k-1 or by anything above k; nothing else.
inline bool may_follow(std::uint32_t n, std::uint32_t prev, std::uint32_t next) {
  if (next < 1 || next > n || prev < 1 || prev > n) return false;
  return next + 1 == prev || next > prev;
}

/// Unique spelling of an element as syllables f_{a1}^{m1} ... f_{as}^{ms}
/// whose index sequence obeys may_follow().
class normal_word {
 public:
  normal_word(std::uint32_t n, std::vector<syllable> syllables)
      : n_(n), syllables_(std::move(syllables)) {
    if (auto why = violation(n_, syllables_); !why.empty()) throw std::invalid_argument(why);
  }

  std::uint32_t n() const { return n_; }
  const std::vector<syllable> &syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }

  std::size_t length() const {
    std::size_t k = 0;
    for (const auto &s : syllables_) k += static_cast<std::size_t>(std::llabs(s.exponent));
    return k;
  }

  std::vector<letter> letters() const {
    std::vector<letter> out;
    out.reserve(length());
    for (const auto &s : syllables_) {
      const int sign = s.exponent > 0 ? 1 : -1;
      for (std::int64_t k = 0; k < std::llabs(s.exponent); ++k) out.push_back({s.index, sign});
    }
    return out;
  }

  /// "e" for the identity, otherwise e.g. "f2 f1^-1 f3^2".
  std::string to_string() const {
    if (syllables_.empty()) return "e";
    std::ostringstream os;
    for (std::size_t k = 0; k < syllables_.size(); ++k) {
      if (k) os << ' ';
      os << 'f' << syllables_[k].index;
      if (syllables_[k].exponent != 1) os << '^' << syllables_[k].exponent;
    }
    return os.str();
  }

  /// Empty when the syllables form a valid normal word.
  static std::string violation(std::uint32_t n, std::span<const syllable> syllables) {
    for (std::size_t k = 0; k < syllables.size(); ++k) {
      const auto &s = syllables[k];
      if (s.index < 1 || s.index > n) return "syllable index " + std::to_string(s.index) + " out of range";
      if (s.exponent == 0) return "zero exponent at syllable " + std::to_string(k);
      if (k > 0 && !may_follow(n, syllables[k - 1].index, s.index))
        return "index " + std::to_string(s.index) + " may not follow " +
               std::to_string(syllables[k - 1].index);
    }
    return {};
  }

  friend bool operator==(const normal_word &, const normal_word &) = default;

 private:
  std::uint32_t n_;
  std::vector<syllable> syllables_;
};

/// Reads a heap bottom-up, always taking the left-most cell that has nothing
/// beneath it in its own or adjacent columns. Runs of one column merge into a
/// syllable. The left-most choice is what makes the sequence obey may_follow():
/// a later cell can only sit to the right or one column to the left.
inline normal_word normal_form(const colored_heap &h) {
  const auto n = h.columns();
  std::vector<std::size_t> next(n + 2, 0);  // first unread cell per column
  auto bottom = [&](std::uint32_t i) -> std::uint32_t {
    if (i < 1 || i > n) return UINT32_MAX;
    const auto cs = h.column(i);
    return next[i] < cs.size() ? cs[next[i]].level : UINT32_MAX;
  };
  auto available = [&](std::uint32_t i) {
    const auto b = bottom(i);
    return b != UINT32_MAX && b < bottom(i - 1) && b < bottom(i + 1);
  };

  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
  std::vector<bool> queued(n + 2, false);
  auto refresh = [&](std::uint32_t i) {
    if (i >= 1 && i <= n && !queued[i] && available(i)) {
      ready.push(i);
      queued[i] = true;
    }
  };
  for (std::uint32_t i = 1; i <= n; ++i) refresh(i);

  std::vector<syllable> out;
  while (!ready.empty()) {
    const auto i = ready.top();
    ready.pop();
    queued[i] = false;
    const auto c = h.column(i)[next[i]++];
    if (!out.empty() && out.back().index == i)
      out.back().exponent += c.color;
    else
      out.push_back({i, c.color});
    refresh(i);
    refresh(i - 1);
    refresh(i + 1);
  }
  return normal_word(n, std::move(out));
}

}  // namespace lfg

#endif
