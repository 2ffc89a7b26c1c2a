#pragma once

#include <cstdint>

namespace optsample {

/**
 * Counter-based random stream: draw i is a SplitMix64 finalization of (key + i * golden).
 *
 * Streams are split from a master seed by an index (restart, trial), so results never
 * depend on the order in which independent streams are consumed.
 */
class Stream {
public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  explicit Stream(std::uint64_t seed) : key_(mix(seed)) {}

  /// Independent child stream for index `index`, domain-separated by `tag`.
  static Stream split(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    return Stream(mix(mix(seed ^ mix(tag + kGolden)) + index * kGolden));
  }

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGolden); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi] (inclusive); multiply-high reduction.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<unsigned __int128>(static_cast<std::uint64_t>(hi - lo) + 1U);
    const auto r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * span) >> 64);
    return lo + static_cast<std::int64_t>(r);
  }

  std::uint64_t counter() const { return counter_; }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace optsample
