#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace liesym {

// Exact rational scalar. Expression templates are disabled so the type plays
// well with Eigen and with mixed integer arithmetic.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::mpz_int;

// Parses "p" or "p/q" (q > 0 after sign normalization); the result is always
// in lowest terms. Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

// Formats as "p" or "p/q" with positive denominator and gcd(p, q) = 1.
std::string format_rational(const Rational& value);

}  // namespace liesym
