#ifndef LFG_HEAP_HPP
#define LFG_HEAP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lfg {

enum class mode { group, semigroup };

inline const char *to_string(mode m) {
  return m == mode::group ? "group" : "semigroup";
}

inline mode parse_mode(const std::string &s) {
  if (s == "group") return mode::group;
  if (s == "semigroup") return mode::semigroup;
  throw std::invalid_argument("unknown mode '" + s + "' (expected group|semigroup)");
}

/// A generator f_index (sign +1) or its inverse (sign -1). Indices are 1-based.
struct letter {
  std::uint32_t index = 1;
  int sign = +1;

  friend bool operator==(const letter &, const letter &) = default;

  letter inverse() const { return {index, -sign}; }
};

struct cell {
  std::uint32_t level = 0;
  std::int8_t color = +1;

  friend bool operator==(const cell &, const cell &) = default;
};

enum class push_outcome { grown, cancelled };

/// Full column stacks. Required whenever a top cell can be removed (group mode,
/// normal-form readout, exact enumeration).
class column_stacks {
 public:
  static constexpr bool supports_removal = true;

  explicit column_stacks(std::uint32_t n) : cols_(n + 2), top_(n + 2, 0) {}

  std::uint32_t top(std::uint32_t i) const { return top_[i]; }
  std::int8_t top_color(std::uint32_t i) const {
    return cols_[i].empty() ? std::int8_t{0} : cols_[i].back().color;
  }
  std::size_t count(std::uint32_t i) const { return cols_[i].size(); }
  std::span<const cell> cells(std::uint32_t i) const { return cols_[i]; }

  void place(std::uint32_t i, cell c) {
    cols_[i].push_back(c);
    top_[i] = c.level;
  }
  void remove_top(std::uint32_t i) {
    cols_[i].pop_back();
    top_[i] = cols_[i].empty() ? 0 : cols_[i].back().level;
  }

  friend bool operator==(const column_stacks &a, const column_stacks &b) {
    return a.cols_ == b.cols_;
  }

 private:
  std::vector<std::vector<cell>> cols_;
  std::vector<std::uint32_t> top_;
};

/// Only the top level, top color and cell count per column. Enough to grow a
/// heap (semigroup walk) in O(n) memory; a removed top cannot be restored.
class column_tops {
 public:
  static constexpr bool supports_removal = false;

  explicit column_tops(std::uint32_t n)
      : top_(n + 2, 0), color_(n + 2, 0), count_(n + 2, 0) {}

  std::uint32_t top(std::uint32_t i) const { return top_[i]; }
  std::int8_t top_color(std::uint32_t i) const { return color_[i]; }
  std::size_t count(std::uint32_t i) const { return count_[i]; }

  void place(std::uint32_t i, cell c) {
    top_[i] = c.level;
    color_[i] = c.color;
    ++count_[i];
  }
  void remove_top(std::uint32_t) {
    throw std::logic_error("column_tops storage cannot remove cells");
  }

  friend bool operator==(const column_tops &, const column_tops &) = default;

 private:
  std::vector<std::uint32_t> top_;
  std::vector<std::int8_t> color_;
  std::vector<std::size_t> count_;
};

/// Colored heap of an element of the locally free group (or semigroup) on n
/// generators. Column i holds the cells of generator f_i; a cell dropped into
/// column i lands one level above the highest of columns i-1, i, i+1.
///
/// Columns are 1-based; columns 0 and n+1 are permanently empty sentinels.
template <class Storage>
class basic_heap {
 public:
  basic_heap(std::uint32_t n, lfg::mode m) : store_(n), n_(n), mode_(m) {
    if (n == 0) throw std::invalid_argument("heap needs at least one column");
    if (m == lfg::mode::group && !Storage::supports_removal)
      throw std::invalid_argument("group-mode heaps need full column storage");
  }

  std::uint32_t columns() const { return n_; }
  lfg::mode mode() const { return mode_; }
  /// Number of cells, i.e. the reduced word length K(w).
  std::size_t size() const { return cells_; }
  bool empty() const { return cells_ == 0; }

  std::uint32_t top_level(std::uint32_t i) const { return store_.top(i); }
  std::int8_t top_color(std::uint32_t i) const { return store_.top_color(i); }
  std::size_t column_size(std::uint32_t i) const { return store_.count(i); }
  std::uint32_t height() const { return height_; }

  std::span<const cell> column(std::uint32_t i) const
    requires Storage::supports_removal
  {
    check_column(i);
    return store_.cells(i);
  }

  /// Column i can lose its top cell in one step: it is nonempty and strictly
  /// above both neighbours (adjacent columns never share a level).
  bool in_roof(std::uint32_t i) const {
    const auto t = store_.top(i);
    return t > 0 && t > store_.top(i - 1) && t > store_.top(i + 1);
  }

  /// Level at which a new cell in column i would land.
  std::uint32_t drop_level(std::uint32_t i) const {
    return 1 + std::max({store_.top(i - 1), store_.top(i), store_.top(i + 1)});
  }

  /// Right-multiplies by g in place.
  push_outcome push(letter g) {
    check_column(g.index);
    if (g.sign != 1 && g.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    if (mode_ == lfg::mode::semigroup && g.sign < 0)
      throw std::invalid_argument("inverse letter f" + std::to_string(g.index) +
                                  "^-1 in semigroup mode");
    if constexpr (Storage::supports_removal) {
      if (mode_ == lfg::mode::group && in_roof(g.index) &&
          store_.top_color(g.index) == -g.sign) {
        remove_top_unchecked(g.index);
        return push_outcome::cancelled;
      }
    }
    const cell c{drop_level(g.index), static_cast<std::int8_t>(g.sign)};
    store_.place(g.index, c);
    ++cells_;
    height_ = std::max(height_, c.level);
    return push_outcome::grown;
  }

  /// Removes the top cell of a roof column (the inverse of the last growth in
  /// that column).
  void pop(std::uint32_t i)
    requires Storage::supports_removal
  {
    check_column(i);
    if (!in_roof(i)) throw std::invalid_argument("column " + std::to_string(i) + " is not in the roof");
    remove_top_unchecked(i);
  }

  friend bool operator==(const basic_heap &a, const basic_heap &b) {
    return a.n_ == b.n_ && a.mode_ == b.mode_ && a.store_ == b.store_;
  }

  /// Builds a heap from explicit column contents without enforcing any
  /// invariant; see heap_violation().
  static basic_heap from_columns(std::uint32_t n, lfg::mode m,
                                 const std::vector<std::vector<cell>> &cols)
    requires Storage::supports_removal
  {
    if (cols.size() != n) throw std::invalid_argument("from_columns: expected one stack per column");
    basic_heap h(n, m);
    for (std::uint32_t i = 1; i <= n; ++i) {
      for (const auto &c : cols[i - 1]) {
        h.store_.place(i, c);
        ++h.cells_;
        h.height_ = std::max(h.height_, c.level);
      }
    }
    return h;
  }

 private:
  void check_column(std::uint32_t i) const {
    if (i < 1 || i > n_)
      throw std::out_of_range("generator index " + std::to_string(i) + " outside [1, " +
                              std::to_string(n_) + "]");
  }

  void remove_top_unchecked(std::uint32_t i) {
    const bool was_highest = store_.top(i) == height_;
    store_.remove_top(i);
    --cells_;
    if (was_highest) {
      height_ = 0;
      for (std::uint32_t j = 1; j <= n_; ++j) height_ = std::max(height_, store_.top(j));
    }
  }

  Storage store_;
  std::uint32_t n_;
  lfg::mode mode_;
  std::size_t cells_ = 0;
  std::uint32_t height_ = 0;
};

using colored_heap = basic_heap<column_stacks>;
using heap_front = basic_heap<column_tops>;

/// Functional form of basic_heap::push.
inline colored_heap push_letter(colored_heap h, letter g) {
  h.push(g);
  return h;
}

inline colored_heap heap_from_word(std::span<const letter> word, std::uint32_t n, mode m) {
  colored_heap h(n, m);
  for (const auto &g : word) h.push(g);
  return h;
}

/// First violated heap condition, if any: adjacent cells on one level, an
/// unsupported cell, touching cells of different color in one column, a
/// non-increasing column, or a colored cell in semigroup mode.
inline std::optional<std::string> heap_violation(const colored_heap &h) {
  const auto n = h.columns();
  // (column, level) occupancy as per-column sorted vectors; levels strictly increase.
  auto occupied = [&](std::uint32_t i, std::uint32_t level) {
    if (i < 1 || i > n) return false;
    const auto cs = h.column(i);
    return std::binary_search(cs.begin(), cs.end(), cell{level, 0},
                              [](const cell &a, const cell &b) { return a.level < b.level; });
  };
  for (std::uint32_t i = 1; i <= n; ++i) {
    const auto cs = h.column(i);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const auto &c = cs[k];
      const std::string where = "cell (" + std::to_string(i) + ", " + std::to_string(c.level) + ")";
      if (c.level == 0) return where + " has level 0";
      if (c.color != 1 && c.color != -1) return where + " has invalid color";
      if (h.mode() == mode::semigroup && c.color != 1) return where + " is colored in semigroup mode";
      if (k > 0 && cs[k - 1].level >= c.level) return "column " + std::to_string(i) + " levels not increasing";
      if (k > 0 && cs[k - 1].level + 1 == c.level && cs[k - 1].color != c.color)
        return where + " touches a cell of the other color below it";
      if (occupied(i + 1, c.level)) return where + " has a horizontal neighbour";
      if (c.level > 1 && !occupied(i - 1, c.level - 1) && !occupied(i, c.level - 1) &&
          !occupied(i + 1, c.level - 1))
        return where + " is unsupported";
    }
  }
  return std::nullopt;
}

/// Injective byte encoding: u32 n, then per column u32 count followed by
/// (u32 level, u8 color) pairs; little-endian, color 0x01 = +, 0xFF = -.
inline std::vector<std::uint8_t> canonical_key(const colored_heap &h) {
  std::vector<std::uint8_t> out;
  out.reserve(4 + 4 * h.columns() + 5 * h.size());
  auto put32 = [&out](std::uint32_t v) {
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
  };
  put32(h.columns());
  for (std::uint32_t i = 1; i <= h.columns(); ++i) {
    const auto cs = h.column(i);
    put32(static_cast<std::uint32_t>(cs.size()));
    for (const auto &c : cs) {
      put32(c.level);
      out.push_back(c.color > 0 ? 0x01 : 0xFF);
    }
  }
  return out;
}

inline std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  s.reserve(2 * bytes.size());
  for (auto b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xF]);
  }
  return s;
}

}  // namespace lfg

#endif
