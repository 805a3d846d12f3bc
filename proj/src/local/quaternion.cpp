#include "h10/local/quaternion.hpp"

#include <stdexcept>

namespace h10 {

QuaternionAlgebra::QuaternionAlgebra(BigRational a, BigRational b) : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha == 0 || beta == 0) throw std::invalid_argument("quaternion parameters must be nonzero");
}

RationalForm QuaternionAlgebra::norm_form() const { return RationalForm{1, -alpha, -beta, alpha * beta}; }

bool quaternion_is_split(const QuaternionAlgebra& A, const PadicContext& ctx) {
  const bool by_symbol = hilbert_symbol(A.alpha, A.beta, ctx) == 1;
  const bool by_norm = is_isotropic_local(A.norm_form(), ctx);
  if (by_symbol != by_norm)
    throw std::logic_error("split criteria disagree for (" + to_string(A.alpha) + ", " + to_string(A.beta) +
                           ") at p = " + std::to_string(ctx.p));
  return by_symbol;
}

bool quaternion_product_check(const BigRational& a, const BigRational& b, const BigRational& c,
                              const PadicContext& ctx) {
  return hilbert_symbol(a, b, ctx) * hilbert_symbol(a, c, ctx) == hilbert_symbol(a, b * c, ctx);
}

} // namespace h10
