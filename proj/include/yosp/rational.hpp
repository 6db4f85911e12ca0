#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace yosp {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Expression templates are off so the type behaves like a
/// plain value inside Eigen containers.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "p/q" or "p" with decimal integers; rejects anything else.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);

bool is_integer(const Rational& q);
/// True for 0, 1, 2, ...
bool is_nonnegative_integer(const Rational& q);

/// Representative of q + Z in [0, 1).
Rational fractional_part(const Rational& q);

/// Uniform rational with numerator in [-max_abs_num, max_abs_num] and
/// denominator in [1, max_den].
Rational random_rational(std::mt19937_64& rng, int max_abs_num, int max_den);

}  // namespace yosp
