#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ratarc {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Natural log of |x|, accurate for integers far beyond double range. x != 0.
double log_abs(const BigInt& x);

/// Parses "p/q", "-p/q" or an integer literal into a canonical rational.
BigRational parse_rational(std::string_view text);

std::string to_string(const BigRational& q);

/// Nearest double to q (round half to even).
double to_double(const BigRational& q);

BigInt lcm(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);

}  // namespace ratarc
