#include "rts/polynomial.hpp"

#include <vector>

namespace rts::reliability {

BigInt ReliabilityPolynomial::coefficient(unsigned exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

ReliabilityPolynomial& ReliabilityPolynomial::add_term(const BigInt& coefficient, unsigned exponent) {
  if (coefficient == 0) return *this;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Rational ReliabilityPolynomial::evaluate(const Rational& p) const {
  const Rational x = variable_ == Variable::P ? p : Rational(1 - p);
  Rational acc = 0;
  Rational power = 1;
  unsigned current = 0;
  for (const auto& [exponent, c] : terms_) {
    while (current < exponent) {
      power *= x;
      ++current;
    }
    acc += Rational(c) * power;
  }
  return acc;
}

ReliabilityPolynomial ReliabilityPolynomial::in_variable(Variable target) const {
  if (target == variable_) return *this;
  ReliabilityPolynomial out(target, quantity_, method_);
  // c * (1 - y)^e = c * sum_i C(e,i) (-1)^i y^i
  for (const auto& [exponent, c] : terms_) {
    BigInt binom = 1;
    for (unsigned i = 0; i <= exponent; ++i) {
      out.add_term(i % 2 == 0 ? BigInt(c * binom) : BigInt(-c * binom), i);
      binom = binom * (exponent - i) / (i + 1);
    }
  }
  return out;
}

std::string ReliabilityPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  const char var = variable_ == Variable::P ? 'p' : 'q';
  std::string out;
  bool first = true;
  for (const auto& [exponent, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (exponent == 0 || magnitude != 1) out += magnitude.str();
    if (exponent > 0) {
      out += var;
      if (exponent > 1) out += "^" + std::to_string(exponent);
    }
  }
  return out;
}

bool ReliabilityPolynomial::operator==(const ReliabilityPolynomial& other) const {
  if (other.variable_ == variable_) return terms_ == other.terms_;
  return terms_ == other.in_variable(variable_).terms_;
}

}  // namespace rts::reliability
