#include "rts/expanded_scheme.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rts/thresholds.hpp"

namespace rts::scheme {

using design::Design;
using design::Point;

namespace {

std::string points_string(const std::vector<Point>& points) {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(points[i]);
  }
  return out;
}

unsigned choose_tau(const Design& design, unsigned sigma) {
  for (unsigned tau = 1; tau <= design.b(); ++tau) {
    UnionExtremes current, previous;
    try {
      current = union_extremes(design, tau);
      previous = union_extremes(design, tau - 1);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooLarge) throw;
      // Fall back to the t-design bounds for the remaining thresholds.
      for (unsigned t2 = tau; t2 <= design.b(); ++t2) {
        if (std::uint64_t{t2 - 1} * design.k() >= sigma) break;
        if (threshold_admissible(design, t2, sigma)) return t2;
      }
      break;
    }
    if (previous.max >= sigma) break;
    if (current.min >= sigma) return tau;
  }
  throw Error(ErrorCode::NotAdmissible, "no threshold tau is admissible with sigma = " + std::to_string(sigma));
}

}  // namespace

ExpandedScheme::ExpandedScheme(Design design, BaseScheme base, unsigned tau, std::vector<Bundle> bundles)
    : design_(std::move(design)), base_(std::move(base)), tau_(tau), bundles_(std::move(bundles)) {
  if (base_.m() != design_.v())
    throw Error(ErrorCode::InvariantViolation, "base scheme must have one share per design point");
  if (bundles_.size() != design_.b()) throw Error(ErrorCode::InvariantViolation, "one bundle per block required");
  for (std::size_t i = 0; i < bundles_.size(); ++i) {
    const auto& block = design_.block(i);
    if (bundles_[i].size() != block.size())
      throw Error(ErrorCode::InvariantViolation, "bundle " + std::to_string(i) + " does not match its block");
    for (std::size_t j = 0; j < block.size(); ++j)
      if (bundles_[i][j].point != block[j])
        throw Error(ErrorCode::InvariantViolation, "bundle " + std::to_string(i) + " does not match its block");
  }
}

ExpandedScheme expanded_deal(const Design& design, unsigned sigma, const FieldElement& secret, std::uint64_t seed,
                             const ExpandedDealOptions& options) {
  const auto v = static_cast<unsigned>(design.v());
  BaseScheme base = options.field ? BaseScheme(*options.field, sigma, v) : BaseScheme::over_default_field(sigma, v);

  unsigned tau = 0;
  if (options.tau) {
    tau = *options.tau;
    if (!threshold_admissible(design, tau, sigma))
      throw Error(ErrorCode::NotAdmissible, "(tau, sigma) = (" + std::to_string(tau) + ", " + std::to_string(sigma) +
                                                ") violates the union conditions");
  } else {
    tau = choose_tau(design, sigma);
  }

  const DealtShares dealt = deal(base, secret, seed);
  std::vector<Bundle> bundles;
  bundles.reserve(design.b());
  for (const auto& block : design.blocks()) {
    Bundle bundle;
    for (Point x : block) bundle.push_back({x, dealt.subshares[x]});
    bundles.push_back(std::move(bundle));
  }
  return ExpandedScheme(design, std::move(base), tau, std::move(bundles));
}

FieldElement reconstruct_from_bundles(const BaseScheme& base, std::span<const Bundle> bundles) {
  std::vector<ShareValue> pooled;
  for (const auto& bundle : bundles)
    for (const auto& s : bundle) pooled.push_back({s.point, s.value});
  return reconstruct(base, pooled);
}

FieldElement expanded_reconstruct(const ExpandedScheme& scheme, std::span<const std::size_t> players) {
  std::set<std::size_t> unique(players.begin(), players.end());
  std::vector<Bundle> bundles;
  for (auto p : unique) {
    if (p >= scheme.players()) throw Error(ErrorCode::InvalidArgument, "no player " + std::to_string(p));
    bundles.push_back(scheme.bundle(p));
  }
  return reconstruct_from_bundles(scheme.base(), bundles);
}

std::vector<std::size_t> RepairPlan::donors() const {
  std::set<std::size_t> unique;
  for (const auto& [point, donor] : assignments) unique.insert(donor);
  return {unique.begin(), unique.end()};
}

RepairImpossible::RepairImpossible(std::size_t target, std::vector<Point> failed_points)
    : Error(ErrorCode::RepairImpossible, "player " + std::to_string(target) + ": cutsets of points " +
                                             points_string(failed_points) + " are entirely unavailable"),
      failed_points_(std::move(failed_points)) {}

RepairPlan plan_repair(const Design& design, std::size_t target, const std::vector<bool>& available) {
  if (target >= design.b()) throw Error(ErrorCode::InvalidArgument, "no player " + std::to_string(target));
  if (available.size() != design.b())
    throw Error(ErrorCode::InvalidArgument, "availability must list every player");
  if (available[target]) throw Error(ErrorCode::InvalidArgument, "the repairing player cannot be its own donor");

  const auto& block = design.block(target);
  std::vector<Point> failed;
  for (Point x : block) {
    bool covered = false;
    for (std::size_t j = 0; j < design.b() && !covered; ++j) covered = j != target && available[j] && design.contains(j, x);
    if (!covered) failed.push_back(x);
  }
  if (!failed.empty()) throw RepairImpossible(target, std::move(failed));

  std::map<Point, std::size_t> assigned;
  for (Point x : block) {
    if (assigned.contains(x)) continue;
    std::size_t best = design.b(), best_score = 0;
    for (std::size_t j = 0; j < design.b(); ++j) {
      if (j == target || !available[j] || !design.contains(j, x)) continue;
      std::size_t score = 0;
      for (Point y : block)
        if (!assigned.contains(y) && design.contains(j, y)) ++score;
      if (score > best_score) {
        best = j;
        best_score = score;
      }
    }
    for (Point y : block)
      if (!assigned.contains(y) && design.contains(best, y)) assigned.emplace(y, best);
  }
  RepairPlan plan;
  plan.target = target;
  plan.assignments.assign(assigned.begin(), assigned.end());
  return plan;
}

RepairPlan plan_repair(const Design& design, std::size_t target, std::span<const std::size_t> available_players) {
  std::vector<bool> available(design.b(), false);
  for (auto p : available_players) {
    if (p >= design.b()) throw Error(ErrorCode::InvalidArgument, "no player " + std::to_string(p));
    available[p] = true;
  }
  return plan_repair(design, target, available);
}

Bundle execute_repair(const ExpandedScheme& scheme, const RepairPlan& plan) {
  Bundle restored;
  for (const auto& [point, donor] : plan.assignments) {
    const Bundle& source = scheme.bundle(donor);
    auto it = std::find_if(source.begin(), source.end(), [&](const Subshare& s) { return s.point == point; });
    if (it == source.end())
      throw Error(ErrorCode::InvariantViolation, "donor " + std::to_string(donor) + " holds no subshare " + std::to_string(point));
    restored.push_back(*it);
  }
  return restored;
}

std::string format_bundles(const ExpandedScheme& scheme) {
  std::string out;
  for (std::size_t i = 0; i < scheme.players(); ++i) {
    out += "P" + std::to_string(i) + ":";
    for (const auto& s : scheme.bundle(i))
      out += " x=" + std::to_string(s.point) + ":y=" + std::to_string(s.value.rank());
    out += "\n";
  }
  return out;
}

}  // namespace rts::scheme
