#pragma once

#include <cstdint>
#include <limits>

namespace rts {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Small deterministic generator (SplitMix64). Streams are split by
/// index rather than by advancing shared state, so a trial's draws depend
/// only on (seed, index) and never on how work was scheduled.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Rng(std::uint64_t seed) noexcept : state_(seed) {}

  /// Independent child stream number `index` of `seed`.
  static constexpr Rng stream(std::uint64_t seed, std::uint64_t index) noexcept {
    return Rng(mix64(seed ^ 0x6A09E667F3BCC909ULL) ^ mix64(index + 0x9E3779B97F4A7C15ULL));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform integer in [0, bound), bound > 0, by rejection.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = max() - max() % bound;
    for (;;) {
      const std::uint64_t x = (*this)();
      if (x < limit) return x % bound;
    }
  }

 private:
  std::uint64_t state_;
};

/// Integer threshold t with P(u < t) = p for u uniform on 64 bits (up to 2^-64).
/// p >= 1 is flagged separately since 2^64 does not fit.
struct BernoulliThreshold {
  std::uint64_t threshold = 0;
  bool always = false;

  static BernoulliThreshold from_probability(double p) noexcept {
    BernoulliThreshold t;
    if (!(p > 0.0)) return t;
    if (p >= 1.0) {
      t.always = true;
      return t;
    }
    const long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
    t.threshold = static_cast<std::uint64_t>(scaled);
    return t;
  }

  bool test(std::uint64_t u) const noexcept { return always || u < threshold; }
};

}  // namespace rts
