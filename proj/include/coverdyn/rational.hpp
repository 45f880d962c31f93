#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace coverdyn {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Fraction with the sign normalized onto the numerator; the cpp_rational
// two-argument constructor insists on a positive denominator.
Rat rat_make(BigInt num, BigInt den);

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else.
Rat rat_parse(const std::string& text);

// "p" for integers, "p/q" otherwise. Round-trips through rat_parse.
std::string rat_str(const Rat& value);

// Conversion that stays finite for operands far beyond double range by
// shifting numerator and denominator together first.
double rat_to_double(const Rat& value);

}  // namespace coverdyn
