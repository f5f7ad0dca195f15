#include <algorithm>
#include <bit>
#include <cmath>

#include "rts/error.hpp"
#include "rts/reliability.hpp"
#include "rts/rng.hpp"

namespace rts::reliability {

namespace {

constexpr std::uint64_t kLanes = 64;

// 64 independent Bernoulli(p) bits. Each lane compares a uniform binary
// fraction against the expansion of p, most significant bit first, and
// stops at the first differing bit; p is a double, so this is exact.
class BernoulliWords {
 public:
  explicit BernoulliWords(double p) {
    if (p >= 1.0) {
      always_ = true;
      return;
    }
    for (double x = p; x > 0.0;) {
      x *= 2.0;
      const bool bit = x >= 1.0;
      if (bit) x -= 1.0;
      bits_.push_back(bit);
    }
  }

  std::uint64_t draw(Rng& rng) const {
    if (always_) return ~std::uint64_t{0};
    std::uint64_t undecided = ~std::uint64_t{0}, result = 0;
    for (std::size_t j = 0; j < bits_.size() && undecided != 0; ++j) {
      const std::uint64_t r = rng();
      if (bits_[j]) {
        result |= undecided & ~r;
        undecided &= r;
      } else {
        undecided &= ~r;
      }
    }
    return result;  // lanes still undecided drew exactly p: not below it
  }

 private:
  bool always_ = false;
  std::vector<bool> bits_;
};

// Per-lane counters stored as bit planes, so adding a 64-lane mask is a
// ripple-carry over a handful of words.
class LaneCounters {
 public:
  void add(std::uint64_t mask) {
    for (std::size_t i = 0; mask != 0; ++i) {
      if (i == planes_.size()) planes_.push_back(0);
      const std::uint64_t carry = planes_[i] & mask;
      planes_[i] ^= mask;
      mask = carry;
    }
  }

  std::uint64_t lane(unsigned l) const {
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < planes_.size(); ++i) value |= ((planes_[i] >> l) & 1) << i;
    return value;
  }

  void clear() { std::fill(planes_.begin(), planes_.end(), 0); }

 private:
  std::vector<std::uint64_t> planes_;
};

}  // namespace

MonteCarloResult monte_carlo(const design::Design& design, std::size_t target, double p, std::uint64_t trials,
                             std::uint64_t seed, const MonteCarloOptions& options) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "p must lie in [0, 1]");
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");

  const CutsetSystem system = cutsets(design, target);
  // Blocks outside every cutset cannot affect repair, so only these are drawn.
  const auto relevant = system.relevant_blocks();
  std::vector<std::size_t> slot(design.b(), 0);
  for (std::size_t i = 0; i < relevant.size(); ++i) slot[relevant[i]] = i;
  auto to_slots = [&](const std::vector<std::size_t>& blocks) {
    std::vector<std::size_t> out;
    for (auto block : blocks) out.push_back(slot[block]);
    return out;
  };
  std::vector<std::vector<std::size_t>> cut_slots;
  for (const auto& c : system.cutsets) cut_slots.push_back(to_slots(c));

  MonteCarloResult result;
  result.p = p;
  result.trials = trials;
  result.seed = seed;

  std::vector<std::vector<std::size_t>> set_slots;
  bool count_sets = false;
  if (options.estimate_expected) {
    try {
      for (const auto& s : enumerate_minimal_repair_sets(design, target).sets) set_slots.push_back(to_slots(s));
      count_sets = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooLarge) throw;
      result.warning = std::string("expected-count estimate skipped: ") + e.what();
    }
  }

  const BernoulliWords bernoulli(p);
  std::vector<std::uint64_t> available(relevant.size());
  LaneCounters counters;
  // Integer accumulators keep the estimate independent of summation order.
  std::uint64_t successes = 0, set_sum = 0, set_sum_sq = 0;

  // Trials 64c .. 64c+63 are the lanes of batch c, drawn from stream c.
  const std::uint64_t batches = (trials + kLanes - 1) / kLanes;
  for (std::uint64_t batch = 0; batch < batches; ++batch) {
    Rng rng = Rng::stream(seed, batch);
    for (auto& word : available) word = bernoulli.draw(rng);
    const std::uint64_t remaining = trials - batch * kLanes;
    const std::uint64_t live = remaining >= kLanes ? ~std::uint64_t{0} : (std::uint64_t{1} << remaining) - 1;

    std::uint64_t ok = live;
    for (const auto& c : cut_slots) {
      std::uint64_t hit = 0;
      for (auto s : c) hit |= available[s];
      ok &= hit;
    }
    successes += static_cast<std::uint64_t>(std::popcount(ok));

    if (count_sets) {
      counters.clear();
      for (const auto& s : set_slots) {
        std::uint64_t all = live;
        for (auto b : s) all &= available[b];
        counters.add(all);
      }
      for (unsigned l = 0; l < kLanes; ++l) {
        const std::uint64_t count = counters.lane(l);
        set_sum += count;
        set_sum_sq += count * count;
      }
    }
  }

  const double n = static_cast<double>(trials);
  result.successes = successes;
  result.r_hat = static_cast<double>(successes) / n;
  result.r_stderr = std::sqrt(result.r_hat * (1.0 - result.r_hat) / n);
  if (count_sets) {
    const double mean = static_cast<double>(set_sum) / n;
    double variance = 0.0;
    if (trials > 1) {
      variance = (static_cast<double>(set_sum_sq) - n * mean * mean) / (n - 1.0);
      if (variance < 0.0) variance = 0.0;
    }
    result.e_hat = mean;
    result.e_stderr = std::sqrt(variance / n);
  }
  return result;
}

}  // namespace rts::reliability
