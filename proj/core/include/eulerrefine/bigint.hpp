#ifndef EULERREFINE_BIGINT_HPP
#define EULERREFINE_BIGINT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace eulerrefine {

/// Arbitrary-precision integer. Every count in the library is one of these.
using Integer = mpz_class;

/// Exact rational, always kept in canonical form (reduced, positive denominator).
using Rational = mpq_class;

/// n! for n >= 0.
Integer factorial(unsigned n);

/// Table of 0!, 1!, ..., n!.
std::vector<Integer> factorials(unsigned n);

/// Multinomial coefficient total!/(parts[0]! parts[1]! ...). Throws std::invalid_argument
/// when the parts do not sum to total.
Integer multinomial(unsigned total, const std::vector<unsigned>& parts);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Parses a base-10 integer; throws std::invalid_argument on malformed input.
Integer parse_integer(const std::string& text);

/// Decimal approximation with the given number of significant digits ("%.{digits}g" style).
std::string to_decimal(const Rational& value, int significant_digits = 10);

} // namespace eulerrefine

#endif
