#include "rts/shamir.hpp"

#include <algorithm>
#include <map>

#include "rts/error.hpp"
#include "rts/rng.hpp"

namespace rts::scheme {

BaseScheme::BaseScheme(FieldSpec field, unsigned sigma, unsigned m) : field_(std::move(field)), sigma_(sigma) {
  if (m + 1 > field_.size())
    throw Error(ErrorCode::InvalidArgument, "field " + field_.to_string() + " too small for " + std::to_string(m) +
                                                " shares (need size >= m+1)");
  points_.reserve(m);
  for (unsigned i = 0; i < m; ++i) points_.push_back(field_.element(i + 1));
  if (sigma_ < 1 || sigma_ > m)
    throw Error(ErrorCode::InvalidArgument, "sigma = " + std::to_string(sigma_) + " must satisfy 1 <= sigma <= m");
}

BaseScheme::BaseScheme(FieldSpec field, unsigned sigma, std::vector<FieldElement> evaluation_points)
    : field_(std::move(field)), sigma_(sigma), points_(std::move(evaluation_points)) {
  const unsigned m = static_cast<unsigned>(points_.size());
  if (m + 1 > field_.size()) throw Error(ErrorCode::InvalidArgument, "field too small for the number of shares");
  if (sigma_ < 1 || sigma_ > m)
    throw Error(ErrorCode::InvalidArgument, "sigma = " + std::to_string(sigma_) + " must satisfy 1 <= sigma <= m");
  std::vector<FieldSpec::Rank> ranks;
  for (const auto& x : points_) {
    if (!(x.spec() == field_)) throw Error(ErrorCode::SpecMismatch, "evaluation point from another field");
    if (x.is_zero()) throw Error(ErrorCode::InvalidArgument, "evaluation points must be nonzero");
    ranks.push_back(x.rank());
  }
  std::sort(ranks.begin(), ranks.end());
  if (std::adjacent_find(ranks.begin(), ranks.end()) != ranks.end())
    throw Error(ErrorCode::InvalidArgument, "evaluation points must be distinct");
}

BaseScheme BaseScheme::over_default_field(unsigned sigma, unsigned m) {
  const auto p = static_cast<std::uint32_t>(field::next_prime(m + 1));
  return BaseScheme(FieldSpec::create(p, 1), sigma, m);
}

FieldElement evaluate(std::span<const FieldElement> coefficients, const FieldElement& x) {
  FieldElement acc = x.spec().zero();
  for (std::size_t j = coefficients.size(); j-- > 0;) acc = acc * x + coefficients[j];
  return acc;
}

DealtShares deal_polynomial(const BaseScheme& base, std::vector<FieldElement> coefficients) {
  if (coefficients.size() != base.sigma())
    throw Error(ErrorCode::InvalidArgument, "polynomial must have exactly sigma coefficients");
  for (const auto& c : coefficients)
    if (!(c.spec() == base.field())) throw Error(ErrorCode::SpecMismatch, "coefficient from another field");
  DealtShares out{coefficients.front(), {}, {}};
  out.subshares.reserve(base.m());
  for (const auto& x : base.evaluation_points()) out.subshares.push_back(evaluate(coefficients, x));
  out.coefficients.assign(coefficients.begin() + 1, coefficients.end());
  return out;
}

DealtShares deal(const BaseScheme& base, const FieldElement& secret, std::uint64_t seed) {
  if (!(secret.spec() == base.field())) throw Error(ErrorCode::SpecMismatch, "secret is not in the base field");
  Rng rng(seed);
  std::vector<FieldElement> coefficients{secret};
  for (unsigned j = 1; j < base.sigma(); ++j)
    coefficients.push_back(base.field().element(static_cast<FieldSpec::Rank>(rng.below(base.field().size()))));
  return deal_polynomial(base, std::move(coefficients));
}

FieldElement reconstruct(const BaseScheme& base, std::span<const ShareValue> shares) {
  std::map<std::size_t, FieldElement> distinct;
  for (const auto& share : shares) {
    if (share.index >= base.m())
      throw Error(ErrorCode::InvalidArgument, "share index " + std::to_string(share.index) + " out of range");
    auto [it, inserted] = distinct.emplace(share.index, share.value);
    if (!inserted && !(it->second == share.value))
      throw Error(ErrorCode::InconsistentShares, "conflicting values for share " + std::to_string(share.index));
  }
  if (distinct.size() < base.sigma())
    throw Error(ErrorCode::NotEnoughShares, "have " + std::to_string(distinct.size()) + " distinct shares, need " +
                                                std::to_string(base.sigma()));

  std::vector<std::size_t> indices;
  std::vector<FieldElement> xs, ys;
  for (const auto& [index, value] : distinct) {
    indices.push_back(index);
    xs.push_back(base.evaluation_point(index));
    ys.push_back(value);
  }
  const std::size_t sigma = base.sigma();
  const FieldSpec& f = base.field();

  // Lagrange interpolant through the first sigma points, evaluated at `at`.
  auto interpolate = [&](const FieldElement& at) {
    FieldElement acc = f.zero();
    for (std::size_t i = 0; i < sigma; ++i) {
      FieldElement num = f.one(), den = f.one();
      for (std::size_t j = 0; j < sigma; ++j) {
        if (j == i) continue;
        num *= at - xs[j];
        den *= xs[i] - xs[j];
      }
      acc += ys[i] * num / den;
    }
    return acc;
  };

  for (std::size_t i = sigma; i < xs.size(); ++i)
    if (!(interpolate(xs[i]) == ys[i]))
      throw Error(ErrorCode::InconsistentShares, "share " + std::to_string(indices[i]) + " is off the interpolating polynomial");
  return interpolate(f.zero());
}

}  // namespace rts::scheme
