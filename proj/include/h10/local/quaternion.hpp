#pragma once

#include "h10/local/isotropy.hpp"

namespace h10 {

/// (alpha, beta / Q_p): i^2 = alpha, j^2 = beta, ij = -ji.
struct QuaternionAlgebra {
  BigRational alpha, beta;

  /// Throws std::invalid_argument for a zero parameter.
  QuaternionAlgebra(BigRational a, BigRational b);

  /// <1, -alpha, -beta, alpha beta>.
  RationalForm norm_form() const;
};

/// Split over Q_p. Computed by norm-form isotropy and by the Hilbert symbol;
/// throws std::logic_error if the two disagree.
bool quaternion_is_split(const QuaternionAlgebra& A, const PadicContext& ctx);

/// (a,b)_p (a,c)_p == (a,bc)_p.
bool quaternion_product_check(const BigRational& a, const BigRational& b, const BigRational& c,
                              const PadicContext& ctx);

} // namespace h10
