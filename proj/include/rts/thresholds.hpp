#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rts/design.hpp"

namespace rts::scheme {

/// Smallest and largest number of points covered by a union of `count` blocks.
struct UnionExtremes {
  std::size_t min = 0;
  std::size_t max = 0;
};

inline constexpr std::uint64_t kThresholdGuard = 10'000'000;

/// Exhaustive over all C(b, count) block subsets; throws TooLarge past 10^7.
UnionExtremes union_extremes(const design::Design& design, std::size_t count);

/// A threshold tau for which every sigma in [sigma_min, sigma_max] satisfies
/// "any tau blocks cover >= sigma points" and "any tau-1 blocks cover <= sigma-1".
struct ThresholdRange {
  unsigned tau = 0;
  unsigned sigma_min = 0;
  unsigned sigma_max = 0;
  bool operator==(const ThresholdRange&) const = default;
};

/// Scans tau = 1, 2, ... and stops at the first tau where
/// U_min(tau) <= U_max(tau - 1).
std::vector<ThresholdRange> thresholds_bruteforce(const design::Design& design);

struct FormulaThreshold {
  unsigned tau = 0;
  unsigned sigma = 0;
  bool operator==(const FormulaThreshold&) const = default;
};

/// Largest tau with k >= C(tau,2)(t-1) + 1 for a t-(v,k,1)-design, and
/// sigma = tau k - C(tau,2)(t-1). Requires t >= 2 and k > t.
FormulaThreshold thresholds_formula(unsigned t, unsigned k);

/// Whether (tau, sigma) yields a threshold scheme for this design: checked by
/// brute force when feasible, otherwise from the t-design union bounds.
bool threshold_admissible(const design::Design& design, unsigned tau, unsigned sigma);

}  // namespace rts::scheme
