#include "rts/constructions.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "rts/error.hpp"
#include "rts/finite_field.hpp"

namespace rts::design {

namespace {

Block sorted(Block b) {
  std::sort(b.begin(), b.end());
  return b;
}

field::FieldSpec prime_power_field(std::uint32_t q, unsigned degree_multiplier) {
  const auto [p, k] = field::prime_power(q);
  if (p == 0) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  return field::FieldSpec::create(static_cast<std::uint32_t>(p), k * degree_multiplier);
}

// Bose: v = 6n + 3 over the idempotent commutative quasigroup
// x o y = (n+1)(x+y) mod 2n+1.
std::vector<Block> bose_blocks(std::uint32_t v) {
  const std::uint32_t n = (v - 3) / 6, m = 2 * n + 1;
  auto label = [](std::uint32_t x, std::uint32_t i) { return 3 * x + i; };
  std::vector<Block> blocks;
  for (std::uint32_t x = 0; x < m; ++x) blocks.push_back({label(x, 0), label(x, 1), label(x, 2)});
  for (std::uint32_t x = 0; x < m; ++x)
    for (std::uint32_t y = x + 1; y < m; ++y) {
      const std::uint32_t xy = ((n + 1) * (x + y)) % m;
      for (std::uint32_t i = 0; i < 3; ++i)
        blocks.push_back(sorted({label(x, i), label(y, i), label(xy, (i + 1) % 3)}));
    }
  return blocks;
}

// Skolem: v = 6n + 1 over the half-idempotent commutative quasigroup of
// order 2n obtained by relabelling Z_2n addition (2i -> i, 2i+1 -> n+i).
std::vector<Block> skolem_blocks(std::uint32_t v) {
  const std::uint32_t n = (v - 1) / 6, m = 2 * n;
  const std::uint32_t infinity = v - 1;
  auto label = [](std::uint32_t x, std::uint32_t i) { return 3 * x + i; };
  auto op = [&](std::uint32_t x, std::uint32_t y) {
    const std::uint32_t s = (x + y) % m;
    return s % 2 == 0 ? s / 2 : n + (s - 1) / 2;
  };
  std::vector<Block> blocks;
  for (std::uint32_t x = 0; x < n; ++x) blocks.push_back({label(x, 0), label(x, 1), label(x, 2)});
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t i = 0; i < 3; ++i)
      blocks.push_back(sorted({infinity, label(n + x, i), label(x, (i + 1) % 3)}));
  for (std::uint32_t x = 0; x < m; ++x)
    for (std::uint32_t y = x + 1; y < m; ++y)
      for (std::uint32_t i = 0; i < 3; ++i)
        blocks.push_back(sorted({label(x, i), label(y, i), label(op(x, y), (i + 1) % 3)}));
  return blocks;
}

// The SQS(10) block list A_0..A_9, B_0..B_9, C_0..C_9 with points written
// 1..9,0 as in the classical presentation.
constexpr std::array<std::array<std::uint32_t, 4>, 30> kSqs10Labels{{
    {1, 2, 4, 5}, {2, 3, 5, 6}, {3, 4, 6, 7}, {4, 5, 7, 8}, {5, 6, 8, 9},
    {6, 7, 9, 0}, {7, 8, 0, 1}, {8, 9, 1, 2}, {9, 0, 2, 3}, {0, 1, 3, 4},
    {1, 2, 3, 7}, {2, 3, 4, 8}, {3, 4, 5, 9}, {4, 5, 6, 0}, {5, 6, 7, 1},
    {6, 7, 8, 2}, {7, 8, 9, 3}, {8, 9, 0, 4}, {9, 0, 1, 5}, {0, 1, 2, 6},
    {1, 3, 5, 8}, {2, 4, 6, 9}, {3, 5, 7, 0}, {4, 6, 8, 1}, {5, 7, 9, 2},
    {6, 8, 0, 3}, {7, 9, 1, 4}, {8, 0, 2, 5}, {9, 1, 3, 6}, {0, 2, 4, 7},
}};

}  // namespace

Design make_sts(std::uint32_t v) {
  if (v < 7 || v > 99 || (v % 6 != 1 && v % 6 != 3))
    throw Error(ErrorCode::InadmissibleOrder, "no STS(" + std::to_string(v) + ") in range: need v = 1,3 (mod 6), 7 <= v <= 99");
  auto blocks = v % 6 == 3 ? bose_blocks(v) : skolem_blocks(v);
  return certify(Design(v, std::move(blocks)), 2, 1);
}

Design make_affine_plane(std::uint32_t q) {
  const auto [p, k] = field::prime_power(q);
  if (p == 0) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (q * q > 128) throw Error(ErrorCode::InvalidArgument, "affine plane order must satisfy q^2 <= 128");
  const auto f = field::FieldSpec::create(static_cast<std::uint32_t>(p), k);
  std::vector<Block> blocks;
  for (std::uint32_t c = 0; c < q; ++c) {
    Block line;
    for (std::uint32_t j = 0; j < q; ++j) line.push_back(q * c + j);
    blocks.push_back(std::move(line));
  }
  for (std::uint32_t m = 0; m < q; ++m)
    for (std::uint32_t c = 0; c < q; ++c) {
      Block line;
      for (std::uint32_t i = 0; i < q; ++i) line.push_back(q * i + f.add(f.mul(m, i), c));
      blocks.push_back(sorted(std::move(line)));
    }
  return certify(Design(q * q, std::move(blocks)), 2, 1);
}

Design make_sqs(std::uint32_t v) {
  std::vector<Block> blocks;
  if (v == 8) {
    for (Point a = 0; a < 8; ++a)
      for (Point b = a + 1; b < 8; ++b)
        for (Point c = b + 1; c < 8; ++c) {
          const Point d = a ^ b ^ c;
          if (d > c) blocks.push_back({a, b, c, d});
        }
  } else if (v == 10) {
    for (const auto& labels : kSqs10Labels) {
      Block block;
      for (auto l : labels) block.push_back((l + 9) % 10);
      blocks.push_back(sorted(std::move(block)));
    }
  } else {
    throw Error(ErrorCode::UnsupportedOrder, "SQS(" + std::to_string(v) + ") not supported (only 8 and 10)");
  }
  return certify(Design(v, std::move(blocks)), 3, 1);
}

Design make_inversive_plane(std::uint32_t q) {
  if (q < 2 || q > 9) throw Error(ErrorCode::InvalidArgument, "inversive plane order must satisfy 2 <= q <= 9");
  const field::FieldSpec f = prime_power_field(q, 2);
  using Rank = field::FieldSpec::Rank;
  const Rank size = f.size();
  const Point infinity = size;

  std::vector<Rank> inverse(size, 0);
  for (Rank z = 1; z < size; ++z) inverse[z] = f.inv(z);

  // Subline: fixed points of the Frobenius z -> z^q, plus infinity.
  std::vector<Rank> subfield;
  for (Rank z = 0; z < size; ++z)
    if (f.pow(z, q) == z) subfield.push_back(z);

  std::set<Block> seen;
  Block image(subfield.size() + 1);

  // z -> a z + b, a != 0.
  for (Rank a = 1; a < size; ++a)
    for (Rank b = 0; b < size; ++b) {
      for (std::size_t i = 0; i < subfield.size(); ++i) image[i] = f.add(f.mul(a, subfield[i]), b);
      image.back() = infinity;
      seen.insert(sorted(image));
    }
  // z -> (a z + b) / (z + d), a d != b.
  for (Rank a = 0; a < size; ++a)
    for (Rank d = 0; d < size; ++d) {
      const Rank ad = f.mul(a, d);
      for (Rank b = 0; b < size; ++b) {
        if (ad == b) continue;
        for (std::size_t i = 0; i < subfield.size(); ++i) {
          const Rank z = subfield[i];
          const Rank den = f.add(z, d);
          image[i] = den == 0 ? infinity : f.mul(f.add(f.mul(a, z), b), inverse[den]);
        }
        image.back() = a;
        seen.insert(sorted(image));
      }
    }

  std::vector<Block> blocks(seen.begin(), seen.end());
  Design design(size + 1, std::move(blocks));
  // Exhaustive certification is cheap for q <= 9 (C(82,3) triples).
  return certify(std::move(design), 3, 1);
}

Design make_family(const std::string& family, std::uint32_t order) {
  if (family == "sts") return make_sts(order);
  if (family == "affine") return make_affine_plane(order);
  if (family == "sqs") return make_sqs(order);
  if (family == "inversive") return make_inversive_plane(order);
  throw Error(ErrorCode::InvalidArgument, "unknown design family '" + family + "'");
}

}  // namespace rts::design
