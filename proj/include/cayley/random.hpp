#pragma once

#include <cstdint>
#include <limits>

namespace cayley {

/// Seed used by every randomized entry point when none is given.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

namespace detail {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

/// Deterministic pseudo-random stream (xoshiro256** seeded through splitmix64).
///
/// Child streams are a pure function of (seed, index), never of how much of the
/// parent stream has been consumed, so replicate i of a sweep sees the same
/// numbers whatever the worker count.  Satisfies UniformRandomBitGenerator.
class RandomSource {
 public:
  using result_type = std::uint64_t;

  explicit RandomSource(std::uint64_t seed = kDefaultSeed) noexcept : seed_(seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) {
      x = detail::splitmix64(x);
      word = x;
    }
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    const std::uint64_t result = detail::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl(state_[3], 45);
    return result;
  }

  /// Uniform integer in [0, bound), bound >= 1 (Lemire's nearly-divisionless method).
  std::uint64_t uniform_below(std::uint64_t bound) noexcept {
    unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform integer in [lo, hi].
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept {
    return lo + uniform_below(hi - lo + 1);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  [[nodiscard]] RandomSource child(std::uint64_t index) const noexcept {
    return RandomSource(detail::splitmix64(seed_ ^ detail::splitmix64(index + 0xA0761D6478BD642FULL)));
  }

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_[4]{};
};

}  // namespace cayley
