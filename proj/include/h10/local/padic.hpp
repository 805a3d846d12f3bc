#pragma once

#include "h10/core/bigrational.hpp"

namespace h10 {

/// Odd prime p with a working precision (modulus exponent for search oracles).
struct PadicContext {
  long p = 13;
  int precision = 4;

  /// Throws std::invalid_argument for non-primes and for p = 2
  /// ("2-adic symbols unsupported").
  static PadicContext make(long p, int precision = 4);
};

/// Exact p-adic valuation; throws std::domain_error for q = 0.
int padic_val(const BigRational& q, const PadicContext& ctx);

/// q / p^v(q), a p-adic unit.
BigRational padic_unit_part(const BigRational& q, const PadicContext& ctx);

/// Legendre symbol of the unit q mod p (q must be a p-adic unit).
int unit_residue_symbol(const BigRational& q, const PadicContext& ctx);

/// Whether q is a square in Q_p (q != 0).
bool is_square_Qp(const BigRational& q, const PadicContext& ctx);

/// (a, b)_p in {+1, -1}; a, b nonzero.
int hilbert_symbol(const BigRational& a, const BigRational& b, const PadicContext& ctx);

} // namespace h10
