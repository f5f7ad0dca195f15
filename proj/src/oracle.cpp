#include <bit>

#include "rts/error.hpp"
#include "rts/reliability.hpp"

namespace rts::reliability {

namespace {

// sum_a counts[a] x^a y^{n-a} with y = 1 - x, expanded in x.
ReliabilityPolynomial expand_by_weight(const std::vector<std::uint64_t>& counts, Variable variable, Quantity quantity) {
  const std::size_t n = counts.size() - 1;
  ReliabilityPolynomial out(variable, quantity, "oracle");
  for (std::size_t a = 0; a <= n; ++a) {
    if (counts[a] == 0) continue;
    // x^a (1 - x)^{n-a}
    for (std::size_t i = 0; i <= n - a; ++i) {
      BigInt c = BigInt(counts[a]) * binomial(n - a, i);
      if (i % 2 == 1) c = -c;
      out.add_term(c, static_cast<unsigned>(a + i));
    }
  }
  return out;
}

}  // namespace

OracleResult exact_oracle(const design::Design& design, std::size_t target) {
  const std::size_t n = design.b() - 1;
  if (n > kOracleMaxOthers)
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " other blocks exceed the oracle limit of 24");
  const CutsetSystem system = cutsets(design, target);

  // Bit i of a pattern stands for the i-th block other than the target.
  auto bit_of = [&](std::size_t block) { return block < target ? block : block - 1; };
  std::vector<std::uint32_t> cut_masks;
  for (const auto& c : system.cutsets) {
    std::uint32_t m = 0;
    for (auto block : c) m |= std::uint32_t{1} << bit_of(block);
    cut_masks.push_back(m);
  }
  auto repairable = [&](std::uint32_t pattern) {
    for (auto m : cut_masks)
      if ((pattern & m) == 0) return false;
    return true;
  };

  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint64_t> repairable_by_weight(n + 1, 0);
  // contained[pattern] = 1 iff the pattern is itself a minimal repair set.
  std::vector<std::uint32_t> contained(total, 0);
  std::uint64_t minimal_sets = 0;
  for (std::uint64_t pattern = 0; pattern < total; ++pattern) {
    const auto mask = static_cast<std::uint32_t>(pattern);
    if (!repairable(mask)) continue;
    ++repairable_by_weight[std::popcount(mask)];
    bool minimal = true;
    for (std::uint32_t m = mask; m != 0 && minimal; m &= m - 1) minimal = !repairable(mask & ~(m & (~m + 1)));
    if (minimal) {
      contained[pattern] = 1;
      ++minimal_sets;
    }
  }
  // Subset-sum transform: contained[pattern] = number of minimal repair
  // sets that are fully available under the pattern.
  for (std::size_t bit = 0; bit < n; ++bit)
    for (std::uint64_t pattern = 0; pattern < total; ++pattern)
      if (pattern & (std::uint64_t{1} << bit)) contained[pattern] += contained[pattern ^ (std::uint64_t{1} << bit)];

  std::vector<std::uint64_t> available_sets_by_weight(n + 1, 0);
  for (std::uint64_t pattern = 0; pattern < total; ++pattern)
    available_sets_by_weight[std::popcount(pattern)] += contained[pattern];

  OracleResult result;
  result.patterns = total;
  result.minimal_sets = minimal_sets;
  // R = sum_a N_a p^a q^{n-a}, written in q.
  std::vector<std::uint64_t> reversed(repairable_by_weight.rbegin(), repairable_by_weight.rend());
  result.r = expand_by_weight(reversed, Variable::Q, Quantity::R);
  result.e = expand_by_weight(available_sets_by_weight, Variable::P, Quantity::E);
  return result;
}

}  // namespace rts::reliability
