#include "rts/error.hpp"
#include "rts/reliability.hpp"

namespace rts::reliability {

namespace {

unsigned exponent(std::int64_t e, const char* what) {
  if (e < 0) throw Error(ErrorCode::NotAdmissible, std::string("negative exponent in ") + what);
  return static_cast<unsigned>(e);
}

}  // namespace

ReliabilityPolynomial r_bibd(std::uint64_t r, std::uint64_t k) {
  if (r < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "r_bibd needs r >= 1 and k >= 1");
  ReliabilityPolynomial out(Variable::Q, Quantity::R, "r_bibd");
  for (std::uint64_t i = 0; i <= k; ++i) {
    const BigInt c = binomial(k, i);
    out.add_term(i % 2 == 0 ? c : BigInt(-c), static_cast<unsigned>(i * (r - 1)));
  }
  return out;
}

ReliabilityPolynomial e_bibd(std::uint64_t r, std::uint64_t k) {
  if (r < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "e_bibd needs r >= 1 and k >= 1");
  ReliabilityPolynomial out(Variable::P, Quantity::E, "e_bibd");
  out.add_term(boost::multiprecision::pow(BigInt(r - 1), static_cast<unsigned>(k)), static_cast<unsigned>(k));
  return out;
}

ReliabilityPolynomial r_sqs(std::uint64_t r1, std::uint64_t r2) {
  const auto a = static_cast<std::int64_t>(r1), b = static_cast<std::int64_t>(r2);
  ReliabilityPolynomial out(Variable::Q, Quantity::R, "r_sqs");
  out.add_term(1, 0);
  out.add_term(-4, exponent(a - 1, "r_sqs"));
  out.add_term(6, exponent(2 * a - b - 1, "r_sqs"));
  out.add_term(-4, exponent(3 * a - 3 * b, "r_sqs"));
  out.add_term(1, exponent(4 * a - 6 * b + 2, "r_sqs"));
  return out;
}

SqsRepairSetCounts sqs_repair_set_counts(std::uint64_t r1, std::uint64_t r2) {
  // pair = r2 - 1 other blocks through a pair of target points;
  // single = blocks meeting the target in exactly one given point.
  const BigInt pair = BigInt(r2) - 1;
  const BigInt single = BigInt(r1) - 3 * BigInt(r2) + 2;
  SqsRepairSetCounts c;
  c.size_two = 3 * pair * pair;
  c.pair_pair_pair = 4 * pair * pair * pair;
  c.pair_pair_point = 12 * pair * pair * single;
  c.pair_point_point = 6 * pair * single * single;
  c.size_four = single * single * single * single;
  return c;
}

ReliabilityPolynomial e_sqs(std::uint64_t r1_, std::uint64_t r2_) {
  const BigInt r1 = r1_, r2 = r2_;
  ReliabilityPolynomial out(Variable::P, Quantity::E, "e_sqs");
  out.add_term(3 * (r2 - 1) * (r2 - 1), 2);
  out.add_term(2 * (r2 - 1) * (3 * r1 * r1 - 12 * r1 * r2 + 6 * r1 + 11 * r2 * r2 - 10 * r2 + 2), 3);
  const BigInt single = r1 - 3 * r2 + 2;
  out.add_term(single * single * single * single, 4);
  return out;
}

std::vector<std::int64_t> tdesign_exponents(const design::DesignParams& params) {
  if (params.lambda != 1 || params.t < 2)
    throw Error(ErrorCode::NotAdmissible, "closed form needs a t-(v,k,1)-design with t >= 2");
  std::vector<std::int64_t> r(params.t + 1, 0);
  for (unsigned j = 1; j <= params.t; ++j) r[j] = static_cast<std::int64_t>(params.replication(j));
  std::vector<std::int64_t> e(params.k + 1, 0);
  for (std::uint64_t i = 1; i <= params.k; ++i) {
    std::int64_t sum = 0;
    const std::uint64_t top = std::min<std::uint64_t>(i, params.t - 1);
    for (std::uint64_t j = 1; j <= top; ++j) {
      const auto term = static_cast<std::int64_t>(binomial(i, j)) * (r[j] - 1);
      sum += j % 2 == 1 ? term : -term;
    }
    e[i] = sum;
  }
  return e;
}

ReliabilityPolynomial r_tdesign(const design::DesignParams& params) {
  const auto e = tdesign_exponents(params);
  ReliabilityPolynomial out(Variable::Q, Quantity::R, "r_tdesign");
  for (std::uint64_t i = 0; i <= params.k; ++i) {
    const BigInt c = binomial(params.k, i);
    out.add_term(i % 2 == 0 ? c : BigInt(-c), exponent(e[i], "r_tdesign"));
  }
  return out;
}

std::optional<ReliabilityPolynomial> formula_r(const design::Design& design) {
  const auto& cert = design.certified();
  if (!cert || cert->lambda != 1 || cert->t < 2) return std::nullopt;
  const auto params = design::DesignParams::of(design);
  if (cert->t == 2) return r_bibd(params.replication(1), params.k);
  if (cert->t == 3 && params.k == 4) return r_sqs(params.replication(1), params.replication(2));
  return r_tdesign(params);
}

std::optional<ReliabilityPolynomial> formula_e(const design::Design& design) {
  const auto& cert = design.certified();
  if (!cert || cert->lambda != 1) return std::nullopt;
  const auto params = design::DesignParams::of(design);
  if (cert->t == 2) return e_bibd(params.replication(1), params.k);
  if (cert->t == 3 && params.k == 4) return e_sqs(params.replication(1), params.replication(2));
  return std::nullopt;
}

}  // namespace rts::reliability
