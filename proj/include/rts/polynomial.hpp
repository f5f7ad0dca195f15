#pragma once

#include <map>
#include <string>

#include "rts/numeric.hpp"

namespace rts::reliability {

/// p is the availability probability, q = 1 - p.
enum class Variable { P, Q };
enum class Quantity { R, E };

/// Exact integer polynomial in p or q, with a record of what it measures
/// and how it was obtained. Terms are kept merged and zero-free, so two
/// polynomials are equal iff their term maps are equal.
class ReliabilityPolynomial {
 public:
  using Terms = std::map<unsigned, BigInt>;

  ReliabilityPolynomial(Variable variable, Quantity quantity, std::string method = {})
      : variable_(variable), quantity_(quantity), method_(std::move(method)) {}

  Variable variable() const noexcept { return variable_; }
  Quantity quantity() const noexcept { return quantity_; }
  const std::string& method() const noexcept { return method_; }
  void set_method(std::string method) { method_ = std::move(method); }

  /// Exponent -> nonzero coefficient; exponent 0 is the constant term.
  const Terms& terms() const noexcept { return terms_; }
  BigInt coefficient(unsigned exponent) const;
  BigInt constant() const { return coefficient(0); }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  /// Adds c * var^exponent, merging with any existing term.
  ReliabilityPolynomial& add_term(const BigInt& coefficient, unsigned exponent);

  /// Value at availability probability p (q = 1 - p substituted as needed).
  Rational evaluate(const Rational& p) const;

  /// Same function rewritten in the other variable via var = 1 - other.
  ReliabilityPolynomial in_variable(Variable target) const;

  /// e.g. "1 - 4q^6 + 6q^10 - 3q^12", ascending by exponent; "0" when empty.
  std::string to_string() const;

  /// Compares as functions of p: the other side is rewritten in this variable.
  bool operator==(const ReliabilityPolynomial& other) const;

 private:
  Variable variable_;
  Quantity quantity_;
  std::string method_;
  Terms terms_;
};

}  // namespace rts::reliability
