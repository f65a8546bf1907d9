#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace quivermod {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;

/// Parses "p/q", "p" or a decimal-free signed integer; throws QuiverError(SYNTAX) otherwise.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering; integers are rendered without a denominator.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer numerator_of(const Rational& value);
Integer denominator_of(const Rational& value);

}  // namespace quivermod
