#include "rts/numeric.hpp"

#include <cctype>
#include <cstdio>

#include "rts/error.hpp"

namespace rts {

Rational parse_decimal(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  BigInt digits = 0;
  std::int64_t exponent = 0;
  bool any = false, dot = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      if (dot) --exponent;
      any = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool neg_exp = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg_exp = text[i++] == '-';
    std::int64_t e = 0;
    bool exp_digits = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      e = e * 10 + (text[i] - '0');
      exp_digits = true;
      if (e > 1000) throw Error(ErrorCode::ParseError, "exponent too large in '" + text + "'");
    }
    if (!exp_digits) any = false;
    exponent += neg_exp ? -e : e;
  }
  if (!any || i != text.size()) throw Error(ErrorCode::ParseError, "not a decimal number: '" + text + "'");
  Rational value(digits);
  const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0)
    value /= Rational(scale);
  else
    value *= Rational(scale);
  return negative ? Rational(-value) : value;
}

std::string to_decimal_string(const Rational& x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x.convert_to<double>());
  return buf;
}

}  // namespace rts
