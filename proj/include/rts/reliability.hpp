#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rts/design.hpp"
#include "rts/numeric.hpp"
#include "rts/polynomial.hpp"

namespace rts::reliability {

/// For each point x_j of the target block, the other blocks containing x_j.
/// Repair is possible iff no cutset is entirely unavailable.
struct CutsetSystem {
  std::size_t target = 0;
  std::vector<design::Point> points;
  std::vector<std::vector<std::size_t>> cutsets;

  /// `available` has one flag per block; the target's flag is ignored.
  bool repair_possible(const std::vector<bool>& available) const;
  /// Indices j whose cutset is entirely unavailable.
  std::vector<std::size_t> failed(const std::vector<bool>& available) const;
  /// Union of all cutsets, ascending.
  std::vector<std::size_t> relevant_blocks() const;
};

CutsetSystem cutsets(const design::Design& design, std::size_t target);

// Closed forms. R polynomials are in q, E polynomials in p.

/// (1 - q^{r-1})^k for a (v,k,1)-BIBD with replication number r.
ReliabilityPolynomial r_bibd(std::uint64_t r, std::uint64_t k);
/// (r-1)^k p^k.
ReliabilityPolynomial e_bibd(std::uint64_t r, std::uint64_t k);
/// 1 - 4q^{r1-1} + 6q^{2r1-r2-1} - 4q^{3r1-3r2} + q^{4r1-6r2+2}.
ReliabilityPolynomial r_sqs(std::uint64_t r1, std::uint64_t r2);

/// Counts of minimal repair sets in an SQS by size and shape.
struct SqsRepairSetCounts {
  BigInt size_two;
  BigInt pair_pair_pair;
  BigInt pair_pair_point;
  BigInt pair_point_point;
  BigInt size_four;

  BigInt size_three() const { return pair_pair_pair + pair_pair_point + pair_point_point; }
};

SqsRepairSetCounts sqs_repair_set_counts(std::uint64_t r1, std::uint64_t r2);
/// 3(r2-1)^2 p^2 + 2(r2-1)(3r1^2 - 12r1r2 + 6r1 + 11r2^2 - 10r2 + 2) p^3 + (r1-3r2+2)^4 p^4.
ReliabilityPolynomial e_sqs(std::uint64_t r1, std::uint64_t r2);

/// Exponents e_0 = 0, e_i = sum_{j=1}^{min(i,t-1)} (-1)^{j+1} C(i,j) (r_j - 1).
std::vector<std::int64_t> tdesign_exponents(const design::DesignParams& params);
/// sum_{i=0}^{k} (-1)^i C(k,i) q^{e_i} for a t-(v,k,1)-design, t >= 2.
/// Throws NotAdmissible for lambda != 1, t < 2 or non-integral parameters.
ReliabilityPolynomial r_tdesign(const design::DesignParams& params);

/// Closed forms matching a certified design, when one applies.
std::optional<ReliabilityPolynomial> formula_r(const design::Design& design);
std::optional<ReliabilityPolynomial> formula_e(const design::Design& design);

/// Minimal covers of the target block by other blocks, each a sorted list
/// of block indices; the list is sorted and duplicate-free.
struct MinimalRepairSets {
  std::size_t target = 0;
  std::vector<std::vector<std::size_t>> sets;

  /// Set size -> number of sets.
  std::map<std::size_t, std::uint64_t> histogram() const;
};

inline constexpr std::size_t kEnumerateMaxBlocks = 64;
inline constexpr std::uint64_t kEnumerateMaxSearch = 1'000'000;

/// Depth-first search branching on the lowest uncovered point. Throws
/// TooLarge when the cutsets span more than 64 blocks or the product of
/// cutset sizes exceeds 10^6.
MinimalRepairSets enumerate_minimal_repair_sets(const design::Design& design, std::size_t target);

/// sum over sets of p^{|M|}.
ReliabilityPolynomial expected_from_sets(const MinimalRepairSets& sets);

inline constexpr std::size_t kOracleMaxOthers = 24;

struct OracleResult {
  ReliabilityPolynomial r{Variable::Q, Quantity::R, "oracle"};
  ReliabilityPolynomial e{Variable::P, Quantity::E, "oracle"};
  std::uint64_t patterns = 0;
  /// Patterns that are themselves minimal repair sets.
  std::uint64_t minimal_sets = 0;
};

/// Enumerates all 2^(b-1) availability patterns of the other blocks.
/// Throws TooLarge when b - 1 > 24.
OracleResult exact_oracle(const design::Design& design, std::size_t target);

struct MonteCarloOptions {
  bool estimate_expected = true;
};

struct MonteCarloResult {
  double p = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t successes = 0;
  double r_hat = 0;
  double r_stderr = 0;
  std::optional<double> e_hat;
  std::optional<double> e_stderr;
  std::string warning;
};

/// Each non-target block is available independently with probability p.
/// Trials are simulated 64 at a time; batch c (trials 64c..64c+63) draws from
/// Rng::stream(seed, c), so results depend only on the seed and trial count.
MonteCarloResult monte_carlo(const design::Design& design, std::size_t target, double p, std::uint64_t trials,
                             std::uint64_t seed, const MonteCarloOptions& options = {});

}  // namespace rts::reliability
