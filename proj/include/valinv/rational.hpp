#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace valinv {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using RVector = std::vector<Rational>;

/// Parses "a", "-a", "a/b" or a finite decimal such as "0.25".
Rational parse_rational(std::string_view text);

/// "a/b", or "a" when the denominator is one.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(Integer(num), Integer(den));
}

Rational dot(const RVector& a, const RVector& b);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Factorial as an exact integer.
Integer factorial(unsigned n);

/// p! n! / (p+n)!, the Beta-type constant of the lower barycenter bound.
Rational beta_constant(unsigned p, unsigned n);

}  // namespace valinv
