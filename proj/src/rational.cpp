#include "juror/rational.hpp"

#include "juror/error.hpp"

#include <cctype>
#include <sstream>

namespace juror {
namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw Error(ErrorKind::kParseError, "expected digits in rational '" + std::string(whole) + "'");
  }
  Integer value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::kParseError, "invalid character in rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(body.substr(0, slash), text);
    Integer den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) {
      throw Error(ErrorKind::kParseError, "zero denominator in '" + std::string(text) + "'");
    }
    result = Rational(num, den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = body.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw Error(ErrorKind::kParseError, "empty decimal '" + std::string(text) + "'");
    }
    Integer whole = int_part.empty() ? Integer(0) : parse_integer(int_part, text);
    Integer frac = frac_part.empty() ? Integer(0) : parse_integer(frac_part, text);
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac_part.size()));
    result = Rational(whole * scale + frac, scale);
  } else {
    result = Rational(parse_integer(body, text));
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) {
  const Integer& den = boost::multiprecision::denominator(value);
  const Integer& num = boost::multiprecision::numerator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_exact_decimal(const Rational& value) {
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);
  Integer rest = den;
  unsigned twos = 0;
  unsigned fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return to_string(value);

  unsigned places = std::max(twos, fives);
  if (places == 0) return num.str();
  Integer scaled = num * boost::multiprecision::pow(Integer(10), places) / den;
  bool negative = scaled < 0;
  std::string digits = (negative ? Integer(-scaled) : scaled).str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

std::string to_approx_decimal(const Rational& value, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << static_cast<double>(value);
  return out.str();
}

}  // namespace juror
