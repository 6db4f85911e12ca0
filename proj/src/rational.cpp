#include "yosp/rational.hpp"

#include <regex>

#include "yosp/errors.hpp"

namespace yosp {

Rational parse_rational(std::string_view text) {
  static const std::regex kPattern(R"(^\+?(-?[0-9]+)(/([0-9]+))?$)");
  std::cmatch match;
  if (!std::regex_match(text.begin(), text.end(), match, kPattern)) {
    throw ParseError("not a rational literal: '" + std::string(text) + "'");
  }
  Integer num(match[1].str());
  Integer den(1);
  if (match[3].matched) {
    den = Integer(match[3].str());
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
  }
  return Rational(num, den);
}

std::string to_string(const Rational& q) { return q.str(); }

Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }

Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

bool is_nonnegative_integer(const Rational& q) { return is_integer(q) && q >= 0; }

Rational fractional_part(const Rational& q) {
  const Integer num = numerator_of(q);
  const Integer den = denominator_of(q);
  Integer rem = num % den;
  if (rem < 0) rem += den;
  return Rational(rem, den);
}

Rational random_rational(std::mt19937_64& rng, int max_abs_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<int> den(1, max_den);
  const int n = num(rng);
  const int d = den(rng);
  return Rational(n, d);
}

}  // namespace yosp
