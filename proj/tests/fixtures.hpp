#pragma once

// Small literal designs shared by the tests (points relabelled 1..v -> 0..v-1).

#include <vector>

#include "rts/design.hpp"
#include "rts/error.hpp"

namespace fixtures {

using rts::design::Block;
using rts::design::Design;

inline Design relabel(std::size_t v, std::vector<Block> one_based) {
  for (auto& b : one_based)
    for (auto& x : b) --x;
  return Design(v, std::move(one_based));
}

// Affine plane of order 3 with players P1..P12 as blocks 0..11.
inline Design sts9_listed() {
  return relabel(9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}, {2, 5, 8}, {3, 6, 9},
                     {1, 5, 9}, {2, 6, 7}, {3, 4, 8}, {1, 6, 8}, {2, 4, 9}, {3, 5, 7}});
}

// 3-(8,4,1): A1, A2, B1..B12 as blocks 0..13.
inline Design sqs8_listed() {
  return relabel(8, {{1, 2, 3, 4}, {5, 6, 7, 8}, {1, 2, 5, 6}, {1, 2, 7, 8}, {1, 3, 5, 7}, {1, 3, 6, 8}, {1, 4, 5, 8},
                     {1, 4, 6, 7}, {3, 4, 7, 8}, {3, 4, 5, 6}, {2, 4, 6, 8}, {2, 4, 5, 7}, {2, 3, 6, 7}, {2, 3, 5, 8}});
}

// All 3-subsets of 5 points: a 3-(5,3,1) design with k = t.
inline Design complete_5_3() {
  std::vector<Block> blocks;
  for (rts::design::Point a = 0; a < 5; ++a)
    for (auto b = a + 1; b < 5; ++b)
      for (auto c = b + 1; c < 5; ++c) blocks.push_back({a, b, c});
  return Design(5, blocks);
}

// Asserts that `expr` throws rts::Error with the given code.
#define CHECK_CODE(expr, expected)                 \
  do {                                             \
    bool thrown_ = false;                          \
    try {                                          \
      (void)(expr);                                \
    } catch (const rts::Error& e_) {               \
      thrown_ = true;                              \
      CHECK_MESSAGE(e_.code() == (expected), e_.what()); \
    }                                              \
    CHECK_MESSAGE(thrown_, "no rts::Error from " #expr); \
  } while (0)

}  // namespace fixtures
