#pragma once

#include <cstdint>

namespace ubckit {

/// xorshift64* generator (shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D).
/// The seed is passed through one splitmix64 step so that seed 0 is valid.
/// Bounded draws use rejection sampling, so every sequence is identical on
/// every platform and standard library.
class XorShift64Star {
 public:
  explicit XorShift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
      draw = next();
    } while (draw >= limit);
    return draw % bound;
  }

  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Uniform nonzero coefficient in {−bound, …, −1, 1, …, bound}.
  std::int64_t nonzero_coefficient(std::int64_t bound) {
    const std::int64_t v = between(1, 2 * bound);
    return v <= bound ? v - bound - 1 : v - bound;
  }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Independent stream for job `index` of a run seeded with `seed`.
inline XorShift64Star stream_for(std::uint64_t seed, std::uint64_t index) {
  return XorShift64Star(XorShift64Star::splitmix64(seed) ^ XorShift64Star::splitmix64(index + 0x632BE59BD9B4E019ULL));
}

}  // namespace ubckit
