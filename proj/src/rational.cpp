#include "ubckit/rational.hpp"

#include "ubckit/errors.hpp"

#include <cctype>

namespace ubckit {

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool canonical_digits(std::string_view digits, bool allow_zero) {
  if (digits.empty()) return false;
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  if (digits.size() > 1 && digits.front() == '0') return false;
  if (!allow_zero && digits == "0") return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num_digits = body.substr(0, slash);
  if (!canonical_digits(num_digits, slash == std::string_view::npos))
    throw InputError("not a canonical rational: '" + original + "'");
  if (negative && num_digits == "0") throw InputError("not a canonical rational: '" + original + "'");

  Integer num{std::string(num_digits)};
  if (negative) num = -num;
  if (slash == std::string_view::npos) return Rational(num);

  std::string_view den_digits = body.substr(slash + 1);
  if (!canonical_digits(den_digits, false) || den_digits == "1")
    throw InputError("not a canonical rational: '" + original + "'");
  Integer den{std::string(den_digits)};
  if (gcd(num < 0 ? Integer(-num) : num, den) != 1)
    throw InputError("rational not in lowest terms: '" + original + "'");
  return Rational(num, den);
}

}  // namespace ubckit
