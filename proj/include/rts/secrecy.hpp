#pragma once

#include <cstdint>
#include <span>

#include "rts/design.hpp"
#include "rts/finite_field.hpp"
#include "rts/numeric.hpp"

namespace rts::scheme {

struct SecrecyReport {
  bool exhaustive = false;
  /// Polynomials tallied per secret value.
  std::uint64_t trials_per_secret = 0;
  /// Distinct subshare indices jointly held by the coalition.
  std::size_t view_size = 0;
  /// Largest total-variation distance between the coalition's view
  /// distributions conditioned on two different secrets.
  Rational max_distance = 0;
};

inline constexpr std::uint32_t kSecrecyMaxField = 16;
inline constexpr std::uint64_t kSecrecyExhaustiveGuard = 1'000'000;

/// Exhaustive over all |F|^sigma polynomials when that is <= 10^6,
/// otherwise `trials` seeded samples per secret. Throws TooLarge if |F| > 16.
SecrecyReport secrecy_probe(const design::Design& design, unsigned sigma, std::span<const std::size_t> players,
                            const field::FieldSpec& field, std::uint64_t trials, std::uint64_t seed);

}  // namespace rts::scheme
