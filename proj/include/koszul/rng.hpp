#pragma once

#include <cstdint>

namespace koszul {

/// Counter-based generator: value k of stream `seed` is splitmix64(seed, k).
/// The same seed always yields the same sequence on every platform.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed ^ (stream * 0xD1B54A32D192ED03ULL)) {}

  std::uint64_t next() { return mix(seed_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  std::uint64_t counter() const { return counter_; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 20260101;

}  // namespace koszul
