#ifndef LFG_RNG_HPP
#define LFG_RNG_HPP

#include <cstdint>

namespace lfg {

/// Counter-based generator: output(step) = mix(key + step * gamma), the
/// SplitMix64 finaliser applied to a Weyl sequence. Every draw is a pure
/// function of (seed, stream, step), so trials can run in any order or in
/// parallel and still reproduce bit for bit.
class counter_rng {
 public:
  static constexpr std::uint64_t gamma = 0x9E3779B97F4A7C15ull;

  counter_rng(std::uint64_t seed, std::uint64_t stream) : key_(derive_key(seed, stream)) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) {
    return mix(seed ^ mix(stream + 0x632BE59BD9B4E019ull));
  }

  std::uint64_t at(std::uint64_t step) const { return mix(key_ + (step + 1) * gamma); }

  std::uint64_t operator()() { return at(counter_++); }

  /// Uniform in [0, m) by plain modular reduction; the bias is at most
  /// m / 2^64, below 2^-53 for every m < 2^11.
  std::uint32_t below(std::uint32_t m) { return static_cast<std::uint32_t>((*this)() % m); }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  std::uint64_t position() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace lfg

#endif
