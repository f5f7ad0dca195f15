#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rts/design.hpp"
#include "rts/error.hpp"
#include "rts/shamir.hpp"

namespace rts::scheme {

struct Subshare {
  design::Point point;
  FieldElement value;
};

/// The subshares held by one player, ordered by point.
using Bundle = std::vector<Subshare>;

struct ExpandedDealOptions {
  /// Base field; defaults to GF(P), P the smallest prime >= v + 1.
  std::optional<FieldSpec> field;
  /// Expanded threshold; defaults to the tau whose brute-force sigma range contains sigma.
  std::optional<unsigned> tau;
};

/// A (sigma, v) Shamir scheme whose subshares are bundled per block: player i
/// receives s_x for every x in block i.
class ExpandedScheme {
 public:
  ExpandedScheme(design::Design design, BaseScheme base, unsigned tau, std::vector<Bundle> bundles);

  const design::Design& design() const noexcept { return design_; }
  const BaseScheme& base() const noexcept { return base_; }
  unsigned tau() const noexcept { return tau_; }
  unsigned sigma() const noexcept { return base_.sigma(); }
  std::size_t players() const noexcept { return bundles_.size(); }
  const Bundle& bundle(std::size_t player) const { return bundles_.at(player); }

 private:
  design::Design design_;
  BaseScheme base_;
  unsigned tau_;
  std::vector<Bundle> bundles_;
};

/// Throws NotAdmissible when (tau, sigma) does not give a threshold scheme.
ExpandedScheme expanded_deal(const design::Design& design, unsigned sigma, const FieldElement& secret,
                             std::uint64_t seed, const ExpandedDealOptions& options = {});

/// Pools the distinct subshares of the bundles and interpolates.
/// Throws NotEnoughShares when fewer than sigma distinct subshares are pooled.
FieldElement reconstruct_from_bundles(const BaseScheme& base, std::span<const Bundle> bundles);

FieldElement expanded_reconstruct(const ExpandedScheme& scheme, std::span<const std::size_t> players);

/// Which other player sends each lost subshare, ordered by point.
struct RepairPlan {
  std::size_t target = 0;
  std::vector<std::pair<design::Point, std::size_t>> assignments;

  std::vector<std::size_t> donors() const;
};

class RepairImpossible : public Error {
 public:
  RepairImpossible(std::size_t target, std::vector<design::Point> failed_points);

  /// Points of the target block whose cutsets are entirely unavailable.
  const std::vector<design::Point>& failed_points() const noexcept { return failed_points_; }

 private:
  std::vector<design::Point> failed_points_;
};

/// Greedy planner: for each point of the target block in order, if it is
/// not yet assigned, pick the available donor containing it that covers the
/// most unassigned points (lowest index on ties).
/// `available` has one flag per player; the target must be unavailable.
RepairPlan plan_repair(const design::Design& design, std::size_t target, const std::vector<bool>& available);

RepairPlan plan_repair(const design::Design& design, std::size_t target, std::span<const std::size_t> available_players);

/// Copies the assigned subshares from the donors' bundles.
Bundle execute_repair(const ExpandedScheme& scheme, const RepairPlan& plan);

/// "P<i>: x=<point>:y=<rank> ..." lines, one per player.
std::string format_bundles(const ExpandedScheme& scheme);

}  // namespace rts::scheme
