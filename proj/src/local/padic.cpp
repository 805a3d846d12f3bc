#include "h10/local/padic.hpp"

#include <stdexcept>

namespace h10 {

namespace {

int valuation(BigInt n, const BigInt& p) {
  int v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

void require_odd(const PadicContext& ctx) {
  if (ctx.p == 2) throw std::invalid_argument("2-adic symbols unsupported");
}

} // namespace

PadicContext PadicContext::make(long p, int precision) {
  if (p == 2) throw std::invalid_argument("2-adic symbols unsupported");
  const BigInt P(p);
  if (p < 3 || mpz_probab_prime_p(P.get_mpz_t(), 30) == 0)
    throw std::invalid_argument("p = " + std::to_string(p) + " is not an odd prime");
  if (precision < 1) throw std::invalid_argument("precision must be positive");
  return PadicContext{p, precision};
}

int padic_val(const BigRational& q, const PadicContext& ctx) {
  if (q == 0) throw std::domain_error("p-adic valuation of zero undefined");
  const BigInt p(ctx.p);
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

BigRational padic_unit_part(const BigRational& q, const PadicContext& ctx) {
  const int v = padic_val(q, ctx);
  BigInt pv;
  mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(ctx.p), static_cast<unsigned long>(v < 0 ? -v : v));
  BigRational r = q;
  if (v >= 0)
    r /= BigRational(pv);
  else
    r *= BigRational(pv);
  r.canonicalize();
  return r;
}

int unit_residue_symbol(const BigRational& q, const PadicContext& ctx) {
  require_odd(ctx);
  const BigInt p(ctx.p);
  const BigInt prod = q.get_num() * q.get_den();  // same square class as q
  const int s = mpz_legendre(prod.get_mpz_t(), p.get_mpz_t());
  if (s == 0) throw std::domain_error("not a p-adic unit");
  return s;
}

bool is_square_Qp(const BigRational& q, const PadicContext& ctx) {
  if (padic_val(q, ctx) % 2 != 0) return false;
  return unit_residue_symbol(padic_unit_part(q, ctx), ctx) == 1;
}

int hilbert_symbol(const BigRational& a, const BigRational& b, const PadicContext& ctx) {
  require_odd(ctx);
  if (a == 0 || b == 0) throw std::domain_error("Hilbert symbol of zero");
  const int alpha = padic_val(a, ctx), beta = padic_val(b, ctx);
  const BigRational u = padic_unit_part(a, ctx), v = padic_unit_part(b, ctx);
  int s = 1;
  if ((alpha % 2 != 0) && (beta % 2 != 0) && ((ctx.p - 1) / 2) % 2 != 0) s = -s;
  if (beta % 2 != 0) s *= unit_residue_symbol(u, ctx);
  if (alpha % 2 != 0) s *= unit_residue_symbol(v, ctx);
  return s;
}

} // namespace h10
