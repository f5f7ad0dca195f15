#include <algorithm>
#include <set>

#include "rts/error.hpp"
#include "rts/reliability.hpp"

namespace rts::reliability {

CutsetSystem cutsets(const design::Design& design, std::size_t target) {
  if (target >= design.b()) throw Error(ErrorCode::InvalidArgument, "no block " + std::to_string(target));
  CutsetSystem system;
  system.target = target;
  system.points = design.block(target);
  for (auto x : system.points) {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < design.b(); ++i)
      if (i != target && design.contains(i, x)) c.push_back(i);
    system.cutsets.push_back(std::move(c));
  }
  return system;
}

bool CutsetSystem::repair_possible(const std::vector<bool>& available) const {
  return failed(available).empty();
}

std::vector<std::size_t> CutsetSystem::failed(const std::vector<bool>& available) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < cutsets.size(); ++j) {
    const auto& c = cutsets[j];
    if (std::none_of(c.begin(), c.end(), [&](std::size_t i) { return available.at(i); })) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> CutsetSystem::relevant_blocks() const {
  std::set<std::size_t> all;
  for (const auto& c : cutsets) all.insert(c.begin(), c.end());
  return {all.begin(), all.end()};
}

}  // namespace rts::reliability
