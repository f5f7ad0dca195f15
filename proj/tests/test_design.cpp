#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "fixtures.hpp"
#include "rts/constructions.hpp"
#include "rts/design.hpp"
#include "rts/numeric.hpp"

using namespace rts::design;
using rts::ErrorCode;

namespace {

// Counts t-subsets by brute force over blocks, independently of validate().
bool is_t_design(const Design& d, unsigned t, std::uint64_t lambda) {
  std::vector<Point> subset(t);
  bool ok = true;
  std::function<void(unsigned, Point)> rec = [&](unsigned depth, Point from) {
    if (!ok) return;
    if (depth == t) {
      std::uint64_t count = 0;
      for (const auto& b : d.blocks())
        count += std::includes(b.begin(), b.end(), subset.begin(), subset.end());
      ok = count == lambda;
      return;
    }
    for (Point x = from; x < d.v(); ++x) {
      subset[depth] = x;
      rec(depth + 1, x + 1);
    }
  };
  rec(0, 0);
  return ok;
}

}  // namespace

TEST_CASE("Steiner triple systems for every admissible order") {
  for (std::uint32_t v = 7; v <= 99; ++v) {
    if (v % 6 != 1 && v % 6 != 3) {
      CHECK_CODE(make_sts(v), ErrorCode::InadmissibleOrder);
      continue;
    }
    CAPTURE(v);
    const auto d = make_sts(v);
    CHECK(d.v() == v);
    CHECK(d.b() == std::uint64_t{v} * (v - 1) / 6);
    CHECK(d.k() == 3);
    REQUIRE(d.certified());
    CHECK(d.certified()->t == 2);
    if (v <= 45) CHECK(is_t_design(d, 2, 1));
  }
  CHECK_CODE(make_sts(3), ErrorCode::InadmissibleOrder);
  CHECK_CODE(make_sts(105), ErrorCode::InadmissibleOrder);
}

TEST_CASE("Bose STS(9) labels") {
  const auto d = make_sts(9);
  CHECK(d.block(0) == Block{0, 1, 2});
  CHECK(d.block(3) == Block{0, 3, 7});
  CHECK(d.block(4) == Block{1, 4, 8});
  CHECK(make_sts(9) == d);
}

TEST_CASE("affine planes and inversive planes") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u}) {
    CAPTURE(q);
    const auto d = make_affine_plane(q);
    CHECK(d.v() == q * q);
    CHECK(d.b() == q * q + q);
    CHECK(is_t_design(d, 2, 1));
  }
  CHECK_CODE(make_affine_plane(6), ErrorCode::NotPrimePower);
  CHECK_CODE(make_affine_plane(13), ErrorCode::InvalidArgument);
  // Lines i = c first: the first line is {0, 1, ..., q-1}.
  CHECK(make_affine_plane(3).block(0) == Block{0, 1, 2});

  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    const auto d = make_inversive_plane(q);
    CHECK(d.v() == q * q + 1);
    CHECK(d.k() == q + 1);
    CHECK(d.b() == q * (q * q + 1));
    CHECK(is_t_design(d, 3, 1));
    CHECK(std::is_sorted(d.blocks().begin(), d.blocks().end()));
  }
  CHECK_CODE(make_inversive_plane(6), ErrorCode::NotPrimePower);
}

TEST_CASE("Steiner quadruple systems") {
  const auto s8 = make_sqs(8);
  CHECK(s8.b() == 14);
  CHECK(is_t_design(s8, 3, 1));
  for (const auto& b : s8.blocks()) CHECK((b[0] ^ b[1] ^ b[2] ^ b[3]) == 0);
  const auto s10 = make_sqs(10);
  CHECK(s10.b() == 30);
  CHECK(is_t_design(s10, 3, 1));
  CHECK_CODE(make_sqs(14), ErrorCode::UnsupportedOrder);
  CHECK_CODE(make_family("fano", 7), ErrorCode::InvalidArgument);
  CHECK(make_family("sqs", 10) == s10);
}

TEST_CASE("block intersections") {
  // Two blocks of a t-(v,k,1) design share at most t-1 points.
  auto max_meet = [](const Design& d) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < d.b(); ++i)
      for (std::size_t j = i + 1; j < d.b(); ++j) {
        std::vector<Point> common;
        std::set_intersection(d.block(i).begin(), d.block(i).end(), d.block(j).begin(), d.block(j).end(),
                              std::back_inserter(common));
        best = std::max(best, common.size());
      }
    return best;
  };
  CHECK(max_meet(make_sts(9)) == 1);
  CHECK(max_meet(make_sqs(10)) == 2);
  CHECK(max_meet(make_inversive_plane(4)) == 2);
}

TEST_CASE("validation reports the first offending subset") {
  CHECK(validate(fixtures::sqs8_listed(), 3, 1).certified);
  CHECK(validate(fixtures::sts9_listed(), 2, 1).subsets_checked == 36);
  auto blocks = fixtures::sts9_listed().blocks();
  blocks[11] = {2, 4, 7};  // {3,5,7} becomes {3,5,8} (1-based)
  const Design broken(9, blocks);
  const auto r = validate(broken, 2, 1);
  CHECK_FALSE(r.certified);
  REQUIRE(r.offending);
  CHECK(*r.offending == Block{2, 6});
  CHECK(r.offending_count == 0);
  CHECK_CODE(certify(broken, 2, 1), ErrorCode::InvariantViolation);
  CHECK_CODE(validate(broken, 4, 1), ErrorCode::InvalidArgument);
  CHECK_FALSE(validate_sampled(broken, 2, 1, 2000, 1).certified);
  CHECK(validate_sampled(make_inversive_plane(7), 3, 1, 1000, 5).certified);
}

TEST_CASE("certification detection") {
  CHECK(detect_certification(fixtures::sts9_listed()) == Certification{2, 1});
  CHECK(detect_certification(fixtures::sqs8_listed()) == Certification{3, 1});
  CHECK(detect_certification(fixtures::complete_5_3()) == Certification{3, 1});
}

TEST_CASE("replication numbers") {
  const DesignParams sqs10{10, 4, 3, 1};
  CHECK(sqs10.replication(1) == 12);
  CHECK(sqs10.replication(2) == 4);
  CHECK(sqs10.replication(3) == 1);
  CHECK(sqs10.blocks() == 30);
  const DesignParams plane7{50, 8, 3, 1};
  CHECK(replication(plane7, 1) == 56);
  CHECK(replication(plane7, 2) == 8);
  CHECK(plane7.blocks() == 350);
  CHECK(DesignParams{9, 3, 2, 1}.replication(1) == 4);
  CHECK_CODE((DesignParams{8, 3, 2, 1}.replication(1)), ErrorCode::NotAdmissible);
  CHECK_FALSE((DesignParams{8, 3, 2, 1}.admissible()));
  CHECK_CODE(DesignParams::of(fixtures::sts9_listed()), ErrorCode::InvalidArgument);
}

TEST_CASE("structural invariants") {
  CHECK_CODE(Design(5, {}), ErrorCode::InvariantViolation);
  CHECK_CODE(Design(5, {{0, 1}, {0, 1, 2}}), ErrorCode::InvariantViolation);
  CHECK_CODE(Design(5, {{1, 0, 2}}), ErrorCode::InvariantViolation);
  CHECK_CODE(Design(5, {{0, 1, 5}}), ErrorCode::InvariantViolation);
  CHECK_CODE(Design(3, {{0, 1, 2}}), ErrorCode::InvariantViolation);
}

TEST_CASE("design file round trip") {
  for (const auto& d : {make_sts(13), make_sqs(10), make_affine_plane(4)}) CHECK(load_design(store_design(d)) == d);
  CHECK(store_design(Design(4, {{0, 1}, {2, 3}})) == "4 2 2\n0 1\n2 3\n");
  CHECK(load_design("# comment\n4 2 2\n0 1\n# another\n2 3\n") == Design(4, {{0, 1}, {2, 3}}));
}

TEST_CASE("design file errors") {
  CHECK_CODE(load_design(""), ErrorCode::ParseError);
  CHECK_CODE(load_design("4 2 2\n0 1\n"), ErrorCode::ParseError);
  CHECK_CODE(load_design("4 2 2\n0 1\n2 x\n"), ErrorCode::ParseError);
  CHECK_CODE(load_design("4 2 2\n0 1\n2 3 1\n"), ErrorCode::InvariantViolation);
  CHECK_CODE(load_design("4 2 2\n0 1\n2 4\n"), ErrorCode::InvariantViolation);
  CHECK_CODE(load_design("4 1 2\n0 1\n2 3\n"), ErrorCode::ParseError);
  CHECK_CODE(read_design_file("/nonexistent/design.txt"), ErrorCode::InvalidArgument);
}
