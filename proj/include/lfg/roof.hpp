#ifndef LFG_ROOF_HPP
#define LFG_ROOF_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lfg/heap.hpp"

namespace lfg {

/// Achievable generators of an element: entry i (1-based) is 0 when column i
/// is not in the roof, otherwise the color of its top cell.
class roof_set {
 public:
  roof_set() = default;
  explicit roof_set(std::uint32_t n) : entries_(n, 0) {}

  std::uint32_t columns() const { return static_cast<std::uint32_t>(entries_.size()); }
  std::size_t size() const { return size_; }
  bool marked(std::uint32_t i) const { return entries_.at(i - 1) != 0; }
  std::int8_t color(std::uint32_t i) const { return entries_.at(i - 1); }
  const std::vector<std::int8_t> &entries() const { return entries_; }

  void mark(std::uint32_t i, std::int8_t color) {
    auto &e = entries_.at(i - 1);
    if (e == 0 && color != 0) ++size_;
    if (e != 0 && color == 0) --size_;
    e = color;
  }

  /// Maximum roof size ceil(n/2), reached by marking every other column.
  static std::size_t size_bound(std::uint32_t n) { return (n + 1) / 2; }

  bool non_adjacent() const {
    for (std::size_t i = 1; i < entries_.size(); ++i)
      if (entries_[i] != 0 && entries_[i - 1] != 0) return false;
    return true;
  }

  friend bool operator==(const roof_set &, const roof_set &) = default;

 private:
  std::vector<std::int8_t> entries_;
  std::size_t size_ = 0;
};

template <class Storage>
roof_set roof_of(const basic_heap<Storage> &h) {
  roof_set roof(h.columns());
  for (std::uint32_t i = 1; i <= h.columns(); ++i)
    if (h.in_roof(i)) roof.mark(i, h.top_color(i));
  return roof;
}

template <class Storage>
std::size_t roof_size(const basic_heap<Storage> &h) {
  std::size_t s = 0;
  for (std::uint32_t i = 1; i <= h.columns(); ++i) s += h.in_roof(i) ? 1 : 0;
  return s;
}

}  // namespace lfg

#endif
