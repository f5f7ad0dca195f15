#include <doctest.h>

#include "fixtures.hpp"
#include "rts/finite_field.hpp"
#include "rts/numeric.hpp"

using namespace rts::field;
using rts::ErrorCode;

TEST_CASE("GF(9) uses x^2 + 1 and has x * x = -1") {
  const auto f = FieldSpec::create(3, 2);
  CHECK(f.size() == 9);
  CHECK(f.modulus() == std::vector<std::uint32_t>{1, 0, 1});
  const auto x = f.from_coefficients({0, 1});
  CHECK(x.rank() == 3);
  CHECK((x * x).rank() == 2);
  CHECK(x.inv() == f.from_coefficients({0, 2}));
  CHECK(f.to_string() == "3^2");
}

TEST_CASE("prime field basics") {
  const auto f = field_new(7, 1);
  CHECK((f.element(3) * f.element(5)).rank() == 1);
  CHECK(f.element(3).inv().rank() == 5);
  CHECK((f.element(2) - f.element(5)).rank() == 4);
  CHECK((-f.element(0)).rank() == 0);
  CHECK(f.element(3).pow(6).rank() == 1);
  CHECK_CODE(f.element(0).inv(), ErrorCode::DivisionByZero);
  CHECK_CODE(f.element(1) / f.element(0), ErrorCode::DivisionByZero);
  CHECK_CODE(f.element(7), ErrorCode::InvalidArgument);
}

TEST_CASE("field creation errors") {
  CHECK_CODE(FieldSpec::create(4, 1), ErrorCode::NotPrime);
  CHECK_CODE(FieldSpec::create(1, 1), ErrorCode::NotPrime);
  CHECK_CODE(FieldSpec::create(2, 0), ErrorCode::DegreeOutOfRange);
  CHECK_CODE(FieldSpec::create(2, 7), ErrorCode::DegreeOutOfRange);
  CHECK_CODE(FieldSpec::create(1048583, 1), ErrorCode::SizeOutOfRange);
  CHECK_CODE(FieldSpec::parse("x^2"), ErrorCode::ParseError);
  CHECK(FieldSpec::parse("7").size() == 7);
  CHECK(FieldSpec::parse("2^6").size() == 64);
}

TEST_CASE("mixing fields is rejected") {
  const auto a = FieldSpec::create(5, 1), b = FieldSpec::create(7, 1);
  CHECK_CODE(a.element(1) + b.element(1), ErrorCode::SpecMismatch);
  CHECK_CODE(a.element(1) == b.element(1), ErrorCode::SpecMismatch);
  // Equal parameters give interchangeable handles.
  CHECK(a.element(2) * FieldSpec::create(5, 1).element(3) == a.element(1));
}

namespace {

// Reference polynomial arithmetic mod (p, modulus), independent of the
// field's tables: schoolbook product then long division.
std::vector<std::uint32_t> slow_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                    const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t d = prod.size(); d-- > k;) {
    const std::uint64_t c = prod[d];
    if (!c) continue;
    for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
  }
  return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(k)};
}

}  // namespace

TEST_CASE("field axioms hold exhaustively for small fields") {
  for (std::uint32_t n = 2; n <= 1024; ++n) {
    const auto [p, k] = prime_power(n);
    if (p == 0) continue;
    if (k > FieldSpec::kMaxDegree) {
      CHECK_CODE(FieldSpec::create(static_cast<std::uint32_t>(p), k), ErrorCode::DegreeOutOfRange);
      continue;
    }
    const auto f = FieldSpec::create(static_cast<std::uint32_t>(p), k);
    CAPTURE(n);
    const auto size = f.size();
    // Multiplication against the reference on a sample of pairs, all pairs for small fields.
    const std::uint32_t stride = size <= 64 ? 1 : 7;
    bool ok = true;
    for (std::uint32_t a = 0; a < size && ok; a += stride)
      for (std::uint32_t b = 0; b < size && ok; b += stride)
        ok = f.mul(a, b) == f.rank_of(slow_mul(f.coefficients(a), f.coefficients(b), f.modulus(), f.characteristic()));
    CHECK(ok);
    // Additive and multiplicative groups.
    bool groups = true;
    for (std::uint32_t a = 0; a < size && groups; ++a) {
      groups = f.add(a, f.neg(a)) == 0 && f.sub(a, a) == 0 && f.add(a, 0) == a && f.mul(a, 1) == a;
      if (a) groups = groups && f.mul(a, f.inv(a)) == 1 && f.pow(a, size - 1) == 1;
    }
    CHECK(groups);
    // Associativity and distributivity on triples for fields up to 32 elements.
    if (size <= 32) {
      bool ring = true;
      for (std::uint32_t a = 0; a < size; ++a)
        for (std::uint32_t b = 0; b < size; ++b)
          for (std::uint32_t c = 0; c < size; ++c)
            ring = ring && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) &&
                   f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)) &&
                   f.add(f.add(a, b), c) == f.add(a, f.add(b, c)) && f.mul(a, b) == f.mul(b, a);
      CHECK(ring);
    }
  }
}

namespace {

bool has_root(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t value = 0, power = 1;
    for (auto c : poly) {
      value = (value + c * power) % p;
      power = power * x % p;
    }
    if (value == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("modulus is the first irreducible in counter order") {
  // Degree 2 and 3 polynomials are irreducible iff they have no root, so
  // the expected modulus is the first rootless one.
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}, {5, 3}, {7, 2}, {11, 3}}) {
    CAPTURE(p);
    CAPTURE(k);
    std::vector<std::uint32_t> expected;
    for (std::uint64_t counter = 0;; ++counter) {
      std::vector<std::uint32_t> poly(k + 1, 0);
      poly[k] = 1;
      std::uint64_t c = counter;
      for (unsigned i = 0; i < k; ++i, c /= p) poly[i] = static_cast<std::uint32_t>(c % p);
      if (!has_root(poly, p)) {
        expected = poly;
        break;
      }
    }
    CHECK(FieldSpec::create(p, k).modulus() == expected);
  }
  CHECK(FieldSpec::create(2, 4).modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  CHECK(FieldSpec::create(2, 6).modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 0, 0, 1});
}

TEST_CASE("prime helpers") {
  CHECK(is_prime(2));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));
  CHECK(next_prime(10) == 11);
  CHECK(next_prime(13) == 13);
  CHECK(prime_power(64) == std::pair<std::uint64_t, unsigned>{2, 6});
  CHECK(prime_power(49) == std::pair<std::uint64_t, unsigned>{7, 2});
  CHECK(prime_power(12).first == 0);
}

TEST_CASE("exact decimals") {
  using rts::Rational;
  CHECK(rts::parse_decimal("0.125") == Rational(1, 8));
  CHECK(rts::parse_decimal("1e-3") == Rational(1, 1000));
  CHECK(rts::parse_decimal("-2.5") == Rational(-5, 2));
  CHECK_CODE(rts::parse_decimal("0.1x"), ErrorCode::ParseError);
  CHECK_CODE(rts::parse_decimal(""), ErrorCode::ParseError);
  CHECK(rts::to_fraction_string(Rational(3861, 4096)) == "3861/4096");
  CHECK(rts::to_decimal_string(Rational(3861, 4096), 6) == "0.942627");
  CHECK(rts::binomial(49, 2) == 1176);
  CHECK(rts::binomial(3, 5) == 0);
}
