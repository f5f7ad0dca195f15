#include <algorithm>
#include <bit>
#include <set>

#include "rts/error.hpp"
#include "rts/reliability.hpp"

namespace rts::reliability {

namespace {

struct CoverSearch {
  std::vector<std::uint64_t> coverage;               // relevant block -> target-point mask
  std::vector<std::vector<std::size_t>> candidates;  // target point -> relevant blocks through it
  std::uint64_t full = 0;
  std::vector<std::size_t> chosen;
  std::vector<unsigned> multiplicity;  // per target point
  std::set<std::uint64_t> found;

  bool redundant(std::size_t block) const {
    for (std::uint64_t m = coverage[block]; m != 0; m &= m - 1)
      if (multiplicity[static_cast<std::size_t>(std::countr_zero(m))] < 2) return false;
    return true;
  }

  void add(std::size_t block, int delta) {
    for (std::uint64_t m = coverage[block]; m != 0; m &= m - 1)
      multiplicity[static_cast<std::size_t>(std::countr_zero(m))] += delta;
  }

  void run(std::uint64_t covered, std::uint64_t chosen_mask) {
    if (covered == full) {
      found.insert(chosen_mask);
      return;
    }
    const auto x = static_cast<std::size_t>(std::countr_zero(~covered & full));
    for (std::size_t block : candidates[x]) {
      add(block, +1);
      // A block made redundant stays redundant in every extension.
      const bool prune = std::any_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return redundant(c); });
      if (!prune) {
        chosen.push_back(block);
        run(covered | coverage[block], chosen_mask | (std::uint64_t{1} << block));
        chosen.pop_back();
      }
      add(block, -1);
    }
  }
};

}  // namespace

std::map<std::size_t, std::uint64_t> MinimalRepairSets::histogram() const {
  std::map<std::size_t, std::uint64_t> h;
  for (const auto& s : sets) ++h[s.size()];
  return h;
}

MinimalRepairSets enumerate_minimal_repair_sets(const design::Design& design, std::size_t target) {
  const CutsetSystem system = cutsets(design, target);
  MinimalRepairSets result;
  result.target = target;

  const auto relevant = system.relevant_blocks();
  if (relevant.size() > kEnumerateMaxBlocks)
    throw Error(ErrorCode::TooLarge, "cutsets span " + std::to_string(relevant.size()) + " blocks (limit 64)");
  if (system.points.size() > 64) throw Error(ErrorCode::TooLarge, "target block larger than 64 points");
  std::uint64_t estimate = 1;
  for (const auto& c : system.cutsets) {
    if (c.empty()) return result;  // some point can never be repaired
    estimate = estimate > kEnumerateMaxSearch ? estimate : estimate * c.size();
  }
  if (estimate > kEnumerateMaxSearch)
    throw Error(ErrorCode::TooLarge, "search estimate " + std::to_string(estimate) + " exceeds 10^6");

  const std::size_t k = system.points.size();
  CoverSearch search;
  search.full = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  search.coverage.assign(relevant.size(), 0);
  search.candidates.resize(k);
  search.multiplicity.assign(k, 0);
  for (std::size_t r = 0; r < relevant.size(); ++r)
    for (std::size_t j = 0; j < k; ++j)
      if (design.contains(relevant[r], system.points[j])) {
        search.coverage[r] |= std::uint64_t{1} << j;
        search.candidates[j].push_back(r);
      }
  search.run(0, 0);

  // Independent minimality filter on the raw search output.
  auto covers = [&](std::uint64_t mask) {
    std::uint64_t covered = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) covered |= search.coverage[static_cast<std::size_t>(std::countr_zero(m))];
    return covered == search.full;
  };
  for (std::uint64_t mask : search.found) {
    if (!covers(mask)) continue;
    bool minimal = true;
    for (std::uint64_t m = mask; m != 0 && minimal; m &= m - 1) minimal = !covers(mask & ~(m & -m));
    if (!minimal) continue;
    std::vector<std::size_t> set;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) set.push_back(relevant[static_cast<std::size_t>(std::countr_zero(m))]);
    result.sets.push_back(std::move(set));
  }
  std::sort(result.sets.begin(), result.sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return result;
}

ReliabilityPolynomial expected_from_sets(const MinimalRepairSets& sets) {
  ReliabilityPolynomial out(Variable::P, Quantity::E, "enumeration");
  for (const auto& [size, count] : sets.histogram()) out.add_term(BigInt(count), static_cast<unsigned>(size));
  return out;
}

}  // namespace rts::reliability
