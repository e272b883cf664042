#pragma once

#include <cstdint>

namespace symz {

/// SplitMix64. The recurrence constants are part of the corpus file format:
/// a given seed must produce the same forms in every implementation.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kMul1 = 0xBF58476D1CE4E5B9ULL;
  static constexpr std::uint64_t kMul2 = 0x94D049BB133111EBULL;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += kGamma);
    z = (z ^ (z >> 30)) * kMul1;
    z = (z ^ (z >> 27)) * kMul2;
    return z ^ (z >> 31);
  }

  /// Integer in [-bound, bound] as next() mod (2 * bound + 1) - bound.
  long symmetric(long bound) noexcept {
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    return static_cast<long>(next() % span) - bound;
  }

  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace symz
