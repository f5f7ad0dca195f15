#include "rts/thresholds.hpp"

#include <bit>

#include "rts/error.hpp"
#include "rts/numeric.hpp"

namespace rts::scheme {

using design::Design;

UnionExtremes union_extremes(const Design& design, std::size_t count) {
  const std::size_t b = design.b();
  if (count == 0) return {0, 0};
  if (count > b) throw Error(ErrorCode::InvalidArgument, "cannot choose " + std::to_string(count) + " of " + std::to_string(b) + " blocks");
  const std::uint64_t total = binomial_saturated(b, count);
  if (total > kThresholdGuard)
    throw Error(ErrorCode::TooLarge, "C(" + std::to_string(b) + "," + std::to_string(count) + ") block subsets exceed 10^7");

  const std::size_t words = (design.v() + 63) / 64;
  std::vector<std::uint64_t> masks(b * words, 0);
  for (std::size_t i = 0; i < b; ++i)
    for (auto x : design.block(i)) masks[i * words + x / 64] |= std::uint64_t{1} << (x % 64);

  // stack[d] holds the union of the first d chosen blocks.
  std::vector<std::uint64_t> stack((count + 1) * words, 0);
  std::vector<std::size_t> idx(count);
  UnionExtremes out{design.v() + 1, 0};

  std::size_t depth = 0;
  std::size_t next = 0;
  for (;;) {
    if (depth == count) {
      std::size_t size = 0;
      for (std::size_t w = 0; w < words; ++w) size += static_cast<std::size_t>(std::popcount(stack[depth * words + w]));
      out.min = std::min(out.min, size);
      out.max = std::max(out.max, size);
      // backtrack
      --depth;
      next = idx[depth] + 1;
      continue;
    }
    if (next + (count - depth) > b) {
      if (depth == 0) break;
      --depth;
      next = idx[depth] + 1;
      continue;
    }
    idx[depth] = next;
    for (std::size_t w = 0; w < words; ++w)
      stack[(depth + 1) * words + w] = stack[depth * words + w] | masks[next * words + w];
    ++depth;
    next = idx[depth - 1] + 1;
  }
  return out;
}

std::vector<ThresholdRange> thresholds_bruteforce(const Design& design) {
  std::vector<ThresholdRange> out;
  std::size_t previous_max = 0;  // U_max(0)
  for (std::size_t tau = 1; tau <= design.b(); ++tau) {
    const UnionExtremes current = union_extremes(design, tau);
    if (current.min <= previous_max) break;
    out.push_back({static_cast<unsigned>(tau), static_cast<unsigned>(previous_max + 1),
                   static_cast<unsigned>(current.min)});
    previous_max = current.max;
  }
  return out;
}

FormulaThreshold thresholds_formula(unsigned t, unsigned k) {
  if (t < 2 || k <= t)
    throw Error(ErrorCode::InvalidArgument, "threshold formula needs t >= 2 and k > t");
  auto pairs = [](std::uint64_t tau) { return tau * (tau - 1) / 2; };
  std::uint64_t tau = 1;
  while (k >= pairs(tau + 1) * (t - 1) + 1) ++tau;
  return {static_cast<unsigned>(tau), static_cast<unsigned>(tau * k - pairs(tau) * (t - 1))};
}

bool threshold_admissible(const Design& design, unsigned tau, unsigned sigma) {
  if (tau < 1 || tau > design.b() || sigma < 1) return false;
  try {
    const UnionExtremes current = union_extremes(design, tau);
    const UnionExtremes previous = union_extremes(design, tau - 1);
    return current.min >= sigma && previous.max + 1 <= sigma;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
  }
  const auto& cert = design.certified();
  if (!cert || cert->lambda != 1 || cert->t < 2) throw Error(ErrorCode::TooLarge, "threshold check infeasible for this design");
  // Any two blocks of a t-(v,k,1)-design share at most t-1 points.
  const std::uint64_t k = design.k();
  const std::uint64_t lower = tau * k - std::uint64_t{tau} * (tau - 1) / 2 * (cert->t - 1);
  const std::uint64_t upper_previous = (tau - 1) * k;
  return lower >= sigma && upper_previous + 1 <= sigma;
}

}  // namespace rts::scheme
