#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace h10 {

using BigInt = mpz_class;
/// Always canonical: gcd(num, den) = 1 and den > 0 (GMP keeps mpq_class reduced).
using BigRational = mpq_class;

/// Parses "n", "-n", "n/d". Throws std::invalid_argument on malformed text or
/// a zero denominator.
BigRational parse_rational(std::string_view text);

std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

/// max(|num|, den), the naive height.
BigInt height(const BigRational& q);

inline int sign(const BigRational& q) { return sgn(q); }

} // namespace h10
