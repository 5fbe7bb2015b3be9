#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace heartfan {

using Integer = mpz_class;
using Rational = mpq_class;

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Parses "3", "-2/6" and similar. Throws std::invalid_argument on anything else,
// decimal points included.
Rational parse_rational(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text, char sep = ',');

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

// Rounds x to `digits` decimals, half away from zero, and prints without trailing zeros.
std::string format_fixed(const Rational& x, int digits);

int sign(const Integer& x);
int sign(const Rational& x);

}  // namespace heartfan
