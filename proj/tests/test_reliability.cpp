#include <doctest.h>

#include <algorithm>
#include <bit>

#include "fixtures.hpp"
#include "rts/constructions.hpp"
#include "rts/reliability.hpp"

using namespace rts::reliability;
using rts::BigInt;
using rts::ErrorCode;
using rts::Rational;
using rts::design::Design;
using rts::design::DesignParams;

namespace {

std::vector<Design> small_corpus() {
  return {rts::design::make_sts(7), rts::design::make_sts(9), rts::design::make_affine_plane(2),
          rts::design::make_sqs(8), rts::design::certify(fixtures::complete_5_3(), 3, 1)};
}

// Reference census: every subset of the relevant blocks, tested for cover
// and minimality directly.
std::vector<std::vector<std::size_t>> brute_minimal_sets(const Design& d, std::size_t target) {
  const auto relevant = cutsets(d, target).relevant_blocks();
  REQUIRE(relevant.size() <= 20);
  const auto& block = d.block(target);
  auto covers = [&](std::uint32_t mask) {
    for (auto x : block) {
      bool hit = false;
      for (std::size_t i = 0; i < relevant.size() && !hit; ++i) hit = (mask >> i & 1) && d.contains(relevant[i], x);
      if (!hit) return false;
    }
    return true;
  };
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << relevant.size()); ++mask) {
    if (!covers(mask)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < relevant.size() && minimal; ++i)
      if (mask >> i & 1) minimal = !covers(mask & ~(1u << i));
    if (!minimal) continue;
    std::vector<std::size_t> set;
    for (std::size_t i = 0; i < relevant.size(); ++i)
      if (mask >> i & 1) set.push_back(relevant[i]);
    out.push_back(set);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exact repair probability by summing pattern weights p^a (1-p)^(n-a).
Rational brute_repair_probability(const Design& d, std::size_t target, const Rational& p) {
  const auto system = cutsets(d, target);
  const std::size_t n = d.b() - 1;
  Rational total = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> available(d.b(), false);
    for (std::size_t i = 0, j = 0; j < d.b(); ++j) {
      if (j == target) continue;
      available[j] = mask >> i++ & 1;
    }
    if (!system.repair_possible(available)) continue;
    const auto a = static_cast<unsigned>(std::popcount(mask));
    Rational w = 1;
    for (unsigned i = 0; i < a; ++i) w *= p;
    for (std::size_t i = a; i < n; ++i) w *= 1 - p;
    total += w;
  }
  return total;
}

}  // namespace

TEST_CASE("polynomial representation") {
  ReliabilityPolynomial r(Variable::Q, Quantity::R, "test");
  CHECK(r.to_string() == "0");
  CHECK(r.is_zero());
  r.add_term(1, 0).add_term(-4, 12).add_term(1, 12).add_term(6, 10).add_term(-4, 6);
  CHECK(r.to_string() == "1 - 4q^6 + 6q^10 - 3q^12");
  CHECK(r.degree() == 12);
  r.add_term(3, 12);
  CHECK(r.to_string() == "1 - 4q^6 + 6q^10");
  CHECK(r.coefficient(12) == 0);
  ReliabilityPolynomial e(Variable::P, Quantity::E);
  e.add_term(1, 1).add_term(-1, 2);
  CHECK(e.to_string() == "p - p^2");
  CHECK(e.evaluate(Rational(1, 3)) == Rational(2, 9));
  // p - p^2 = q - q^2 under p = 1 - q.
  const auto in_q = e.in_variable(Variable::Q);
  CHECK(in_q.to_string() == "q - q^2");
  CHECK(in_q == e);
  CHECK(r.in_variable(Variable::P).in_variable(Variable::Q).terms() == r.terms());
  for (int i = 0; i <= 10; ++i) {
    const Rational p(i, 10);
    CHECK(r.in_variable(Variable::P).evaluate(p) == r.evaluate(p));
  }
}

TEST_CASE("two-design closed forms") {
  const auto sts9 = r_bibd(4, 3);
  CHECK(sts9.to_string() == "1 - 3q^3 + 3q^6 - q^9");
  CHECK(sts9.evaluate(Rational(1, 2)) == Rational(343, 512));
  CHECK(r_bibd(3, 3).evaluate(Rational(1, 2)) == Rational(27, 64));
  CHECK(r_bibd(1, 3).is_zero());
  CHECK(e_bibd(4, 3).to_string() == "27p^3");
  CHECK(e_bibd(3, 3).to_string() == "8p^3");
  CHECK(e_bibd(1, 3).is_zero());
}

TEST_CASE("quadruple-system closed forms") {
  CHECK(r_sqs(12, 4).to_string() == "1 - 4q^11 + 6q^19 - 4q^24 + q^26");
  const auto sqs8 = r_sqs(7, 3);
  CHECK(sqs8.to_string() == "1 - 4q^6 + 6q^10 - 3q^12");
  CHECK(sqs8.evaluate(Rational(1, 2)) == Rational(3861, 4096));
  CHECK(sqs8.evaluate(1) == 1);
  CHECK(e_sqs(12, 4).to_string() == "27p^2 + 396p^3 + 16p^4");
  CHECK(e_sqs(7, 3).to_string() == "12p^2 + 32p^3");
  CHECK(e_sqs(7, 3).evaluate(0) == 0);

  const auto c10 = sqs_repair_set_counts(12, 4);
  CHECK(c10.size_two == 27);
  CHECK(c10.pair_pair_pair == 108);
  CHECK(c10.pair_pair_point == 216);
  CHECK(c10.pair_point_point == 72);
  CHECK(c10.size_three() == 396);
  CHECK(c10.size_four == 16);
  const auto c8 = sqs_repair_set_counts(7, 3);
  CHECK(c8.size_two == 12);
  CHECK(c8.size_three() == 32);
  CHECK(c8.size_four == 0);
  // The per-shape counts add up to the cubic coefficient for any parameters.
  for (std::uint64_t r2 = 1; r2 < 30; ++r2)
    for (std::uint64_t r1 = 3 * r2; r1 < 120; ++r1) {
      const auto c = sqs_repair_set_counts(r1, r2);
      const auto e = e_sqs(r1, r2);
      CHECK(c.size_two == e.coefficient(2));
      CHECK(c.size_three() == e.coefficient(3));
      CHECK(c.size_four == e.coefficient(4));
    }
}

TEST_CASE("general t-design formula") {
  const auto e = tdesign_exponents(DesignParams{50, 8, 3, 1});
  CHECK(e == std::vector<std::int64_t>{0, 55, 103, 144, 178, 205, 225, 238, 244});
  CHECK(r_tdesign(DesignParams{9, 3, 2, 1}).terms() == r_bibd(4, 3).terms());
  CHECK(r_tdesign(DesignParams{7, 3, 2, 1}).terms() == r_bibd(3, 3).terms());
  CHECK(r_tdesign(DesignParams{8, 4, 3, 1}).terms() == r_sqs(7, 3).terms());
  CHECK(r_tdesign(DesignParams{10, 4, 3, 1}).terms() == r_sqs(12, 4).terms());
  CHECK(r_tdesign(DesignParams{5, 3, 3, 1}).to_string() == "1 - 3q^5 + 3q^8 - q^9");
  CHECK_CODE(r_tdesign(DesignParams{9, 3, 2, 2}), ErrorCode::NotAdmissible);
  CHECK_CODE(r_tdesign(DesignParams{9, 3, 1, 1}), ErrorCode::NotAdmissible);
  CHECK_CODE(r_tdesign(DesignParams{8, 3, 2, 1}), ErrorCode::NotAdmissible);
}

TEST_CASE("formula dispatch") {
  CHECK(formula_r(rts::design::make_sts(9))->method() == "r_bibd");
  CHECK(formula_e(rts::design::make_sts(9))->method() == "e_bibd");
  CHECK(formula_r(rts::design::make_sqs(8))->method() == "r_sqs");
  CHECK(formula_r(rts::design::make_inversive_plane(3))->method() == "r_sqs");
  CHECK(formula_r(rts::design::make_inversive_plane(4))->method() == "r_tdesign");
  CHECK_FALSE(formula_e(rts::design::make_inversive_plane(4)));
  CHECK_FALSE(formula_r(fixtures::sts9_listed()));
}

TEST_CASE("enumeration agrees with the subset census") {
  for (const auto& d : small_corpus()) {
    for (std::size_t target = 0; target < d.b(); target += 3) {
      CAPTURE(d.v());
      CAPTURE(target);
      auto sets = enumerate_minimal_repair_sets(d, target).sets;
      std::sort(sets.begin(), sets.end());
      CHECK(sets == brute_minimal_sets(d, target));
    }
  }
  const auto sts9 = enumerate_minimal_repair_sets(fixtures::sts9_listed(), 0);
  CHECK(sts9.histogram() == std::map<std::size_t, std::uint64_t>{{3, 27}});
  CHECK(expected_from_sets(sts9).to_string() == "27p^3");
  const auto sqs8 = enumerate_minimal_repair_sets(fixtures::sqs8_listed(), 0);
  CHECK(sqs8.histogram() == std::map<std::size_t, std::uint64_t>{{2, 12}, {3, 32}});
  CHECK(expected_from_sets(MinimalRepairSets{}).is_zero());
}

TEST_CASE("enumerated sets are sorted, minimal covers") {
  const auto d = rts::design::make_sqs(10);
  const auto result = enumerate_minimal_repair_sets(d, 7);
  CHECK(result.sets.size() == 439);
  CHECK(std::is_sorted(result.sets.begin(), result.sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }));
  auto covers = [&](const std::vector<std::size_t>& set, std::size_t skip) {
    for (auto x : d.block(7)) {
      bool hit = false;
      for (std::size_t i = 0; i < set.size(); ++i) hit = hit || (i != skip && d.contains(set[i], x));
      if (!hit) return false;
    }
    return true;
  };
  for (const auto& s : result.sets) {
    CHECK(covers(s, s.size()));
    CHECK(std::find(s.begin(), s.end(), 7) == s.end());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK_FALSE(covers(s, i));
  }
  CHECK(expected_from_sets(result).evaluate(1) == 439);
}

TEST_CASE("exact oracle") {
  for (const auto& d : small_corpus()) {
    CAPTURE(d.v());
    const auto o = exact_oracle(d, 0);
    CHECK(o.patterns == (std::uint64_t{1} << (d.b() - 1)));
    CHECK(o.r.variable() == Variable::Q);
    for (const Rational& p : {Rational(1, 3), Rational(7, 10)}) CHECK(o.r.evaluate(p) == brute_repair_probability(d, 0, p));
    const auto sets = enumerate_minimal_repair_sets(d, 0);
    CHECK(o.e == expected_from_sets(sets));
    CHECK(o.minimal_sets == sets.sets.size());
    CHECK(*formula_r(d) == o.r);
    if (auto e = formula_e(d)) CHECK(*e == o.e);
  }
  const Design lone(4, {{0, 1, 2}});
  const auto o = exact_oracle(lone, 0);
  CHECK(o.r.is_zero());
  CHECK(o.e.is_zero());
  CHECK(enumerate_minimal_repair_sets(lone, 0).sets.empty());
  CHECK_CODE(exact_oracle(rts::design::make_sqs(10), 0), ErrorCode::TooLarge);
}

TEST_CASE("every player sees the same polynomials") {
  const auto affine = rts::design::make_affine_plane(3);
  const auto reference = exact_oracle(affine, 0);
  for (std::size_t target = 1; target < affine.b(); ++target) {
    const auto o = exact_oracle(affine, target);
    CHECK(o.r.terms() == reference.r.terms());
    CHECK(o.e.terms() == reference.e.terms());
  }
  const auto sqs8 = rts::design::make_sqs(8);
  const auto r8 = exact_oracle(sqs8, 0);
  for (std::size_t target = 1; target < sqs8.b(); ++target) CHECK(exact_oracle(sqs8, target).r.terms() == r8.r.terms());
  const auto sqs10 = rts::design::make_sqs(10);
  const auto e10 = expected_from_sets(enumerate_minimal_repair_sets(sqs10, 0));
  for (std::size_t target = 1; target < sqs10.b(); ++target)
    CHECK(expected_from_sets(enumerate_minimal_repair_sets(sqs10, target)).terms() == e10.terms());
}

TEST_CASE("reliability is nondecreasing in p") {
  std::vector<ReliabilityPolynomial> polys{r_bibd(3, 3), r_bibd(4, 3), r_sqs(7, 3), r_sqs(12, 4),
                                           r_tdesign(DesignParams{5, 3, 3, 1}), r_tdesign(DesignParams{50, 8, 3, 1}),
                                           exact_oracle(rts::design::make_affine_plane(2), 0).r};
  for (const auto& poly : polys) {
    Rational previous = poly.evaluate(0);
    CHECK(previous == 0);
    bool monotone = true;
    for (int i = 1; i <= 1000; ++i) {
      const Rational value = poly.evaluate(Rational(i, 1000));
      monotone = monotone && value >= previous;
      previous = value;
    }
    CHECK(monotone);
    CHECK(previous == 1);
  }
}

TEST_CASE("Monte Carlo") {
  const auto sqs10 = rts::design::make_sqs(10);
  const auto a = monte_carlo(sqs10, 0, 0.5, 100000, 42);
  const auto b = monte_carlo(sqs10, 0, 0.5, 100000, 42);
  CHECK(a.successes == b.successes);
  CHECK(a.e_hat == b.e_hat);
  CHECK(monte_carlo(sqs10, 0, 0.5, 100000, 43).successes != a.successes);
  const double exact = r_sqs(12, 4).evaluate(Rational(1, 2)).convert_to<double>();
  CHECK(std::abs(a.r_hat - exact) < 4 * std::sqrt(exact * (1 - exact) / 1e5));
  CHECK(std::abs(*a.e_hat - e_sqs(12, 4).evaluate(Rational(1, 2)).convert_to<double>()) < 4 * *a.e_stderr);

  const auto one = monte_carlo(sqs10, 3, 1.0, 1000, 1);
  CHECK(one.r_hat == 1.0);
  CHECK(*one.e_hat == 439.0);
  const auto zero = monte_carlo(sqs10, 3, 0.0, 1000, 1);
  CHECK(zero.r_hat == 0.0);
  CHECK(*zero.e_hat == 0.0);

  // Trial counts that are not multiples of the batch width.
  for (std::uint64_t n : {1u, 63u, 65u, 1000u}) CHECK(monte_carlo(sqs10, 0, 0.7, n, 3).successes <= n);
  CHECK(monte_carlo(sqs10, 0, 1.0, 65, 3).successes == 65);

  CHECK_CODE(monte_carlo(sqs10, 0, 1.5, 10, 0), ErrorCode::InvalidArgument);
  CHECK_CODE(monte_carlo(sqs10, 0, 0.5, 0, 0), ErrorCode::InvalidArgument);
}

TEST_CASE("Monte Carlo on the order-7 inversive plane") {
  const auto d = rts::design::make_inversive_plane(7);
  const auto m = monte_carlo(d, 0, 0.1, 1000000, 7);
  CHECK_FALSE(m.warning.empty());
  CHECK_FALSE(m.e_hat);
  const double exact = r_tdesign(DesignParams{50, 8, 3, 1}).evaluate(Rational(1, 10)).convert_to<double>();
  CHECK(std::abs(m.r_hat - exact) < 3 * std::sqrt(exact * (1 - exact) / 1e6));
  CHECK_CODE(enumerate_minimal_repair_sets(d, 0), ErrorCode::TooLarge);
}
