#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rts/finite_field.hpp"

namespace rts::scheme {

using field::FieldElement;
using field::FieldSpec;

/// A (sigma, m) Shamir scheme over a finite field. Share i (0-based) is the
/// evaluation of the dealt polynomial at the public point x_i.
class BaseScheme {
 public:
  /// Evaluation points default to the field elements of rank 1..m.
  BaseScheme(FieldSpec field, unsigned sigma, unsigned m);
  BaseScheme(FieldSpec field, unsigned sigma, std::vector<FieldElement> evaluation_points);

  /// Over GF(P) with P the smallest prime >= m + 1.
  static BaseScheme over_default_field(unsigned sigma, unsigned m);

  const FieldSpec& field() const noexcept { return field_; }
  unsigned sigma() const noexcept { return sigma_; }
  unsigned m() const noexcept { return static_cast<unsigned>(points_.size()); }
  const FieldElement& evaluation_point(std::size_t i) const { return points_.at(i); }
  const std::vector<FieldElement>& evaluation_points() const noexcept { return points_; }

 private:
  FieldSpec field_;
  unsigned sigma_;
  std::vector<FieldElement> points_;
};

struct DealtShares {
  FieldElement secret;
  /// a_1 .. a_{sigma-1}; dealer-side only.
  std::vector<FieldElement> coefficients;
  /// y_i = a(x_i) for i = 0..m-1.
  std::vector<FieldElement> subshares;
};

/// One base share together with the index of its evaluation point.
struct ShareValue {
  std::size_t index;
  FieldElement value;
};

/// Horner evaluation of sum coefficients[j] x^j.
FieldElement evaluate(std::span<const FieldElement> coefficients, const FieldElement& x);

/// Draws a_1..a_{sigma-1} uniformly from a stream seeded by `seed`.
DealtShares deal(const BaseScheme& base, const FieldElement& secret, std::uint64_t seed);

/// Deals the fixed polynomial sum coefficients[j] x^j (coefficients[0] is the secret).
DealtShares deal_polynomial(const BaseScheme& base, std::vector<FieldElement> coefficients);

/// Lagrange interpolation at 0 from the first sigma distinct shares (by
/// index). Extra shares are checked against the interpolant.
/// Throws NotEnoughShares or InconsistentShares.
FieldElement reconstruct(const BaseScheme& base, std::span<const ShareValue> shares);

}  // namespace rts::scheme
