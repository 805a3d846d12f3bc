#include "h10/local/hypothesis.hpp"

#include <stdexcept>

namespace h10 {

RationalForm HParams::form() const { return tensor(RationalForm{1, a}, RationalForm{1, pi}); }

HypothesisReport hypothesis_h_check(const HParams& params) {
  HypothesisReport rep;
  rep.pi_valuation = padic_val(params.pi, params.ctx);
  if (rep.pi_valuation % 2 == 0) throw std::invalid_argument("π must have odd valuation");
  rep.anisotropic = !is_isotropic_local(params.form(), params.ctx);
  rep.holds = rep.anisotropic;

  const long p = params.ctx.p;
  rep.p_is_1_mod_4 = p % 4 == 1;
  rep.a_is_unit = params.a != 0 && padic_val(params.a, params.ctx) == 0;
  if (rep.a_is_unit) {
    const BigInt P(p);
    BigInt r = params.a.get_num() % P;
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), BigInt(params.a.get_den()).get_mpz_t(), P.get_mpz_t());
    r = (r * inv) % P;
    if (r < 0) r += P;
    const long base = r.get_si();
    long x = base, order = 1;
    while (x != 1) {
      x = x * base % p;
      ++order;
    }
    rep.a_residue_order = order;
    int e = 0;
    long o = order;
    while (o % 2 == 0) {
      o /= 2;
      ++e;
    }
    rep.root_exponent = o == 1 ? e : -1;
  }
  return rep;
}

} // namespace h10
