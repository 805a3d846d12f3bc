#pragma once

// Dense integer polynomial kernel backing Polynomial. Coefficients are stored
// by ascending degree and kept trimmed (no zero leading coefficient); the
// empty vector is the zero polynomial.

#include "h10/core/bigrational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace h10::zpoly {

using ZPoly = std::vector<BigInt>;

void trim(ZPoly& a);
int degree(const ZPoly& a);

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const BigInt& c);

/// Schoolbook product; exposed so tests can cross-check the packed product.
ZPoly mul_schoolbook(const ZPoly& a, const ZPoly& b);
/// Kronecker-substitution product through a single GMP multiplication.
ZPoly mul_kronecker(const ZPoly& a, const ZPoly& b);

/// Nonnegative gcd of all coefficients (0 for the zero polynomial).
BigInt content(const ZPoly& a);
/// a / content(a) with positive leading coefficient.
ZPoly primitive_part(const ZPoly& a);

/// a / b when b divides a in Z[x], nullopt otherwise. b must be nonzero.
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);

/// Primitive gcd with positive leading coefficient, computed by the
/// small-prime modular algorithm with CRT and trial division.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// First `count` primes below 2^31 (descending), used by the modular gcd.
std::span<const std::uint32_t> word_primes(std::size_t count);

} // namespace h10::zpoly
