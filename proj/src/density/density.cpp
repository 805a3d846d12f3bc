#include "h10/density/density.hpp"

#include "h10/local/padic.hpp"

#include <set>
#include <stdexcept>

namespace h10 {

std::vector<RationalPoint> e0_multiples(long count) {
  if (count < 1) throw std::invalid_argument("count must be at least 1");
  const RationalCurve E0;
  const RationalPoint G = RationalPoint::affine(0, 1);
  std::vector<RationalPoint> out{G};
  while (static_cast<long>(out.size()) < count) out.push_back(E0.add(out.back(), G));
  return out;
}

SampleSet u0_sample(long count) {
  if (count < 2) throw std::invalid_argument("count must be at least 2");
  const auto pts = e0_multiples(count);
  SampleSet s;
  s.source = "(x/y)(y'/x') over multiples 1.." + std::to_string(count) + " of (0,1) on y^2 = x^3 + x + 1";
  std::set<BigRational> seen;
  for (long j = 0; j < count; ++j)
    for (long k = 0; k < count; ++k) {
      const RationalPoint &P = pts[static_cast<std::size_t>(j)], &Q = pts[static_cast<std::size_t>(k)];
      if (P.infinity || Q.infinity || P.y == 0 || Q.x == 0) continue;
      BigRational v = (P.x / P.y) * (Q.y / Q.x);
      if (!seen.insert(v).second) continue;
      s.values.push_back(std::move(v));
      s.witnesses.emplace_back(j + 1, k + 1);
    }
  return s;
}

CoverageReport dense_coverage(const SampleSet& samples, long p, int prec) {
  const PadicContext ctx = PadicContext::make(p);
  if (prec < 1) throw std::invalid_argument("precision must be at least 1");
  BigInt modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(ctx.p), static_cast<unsigned long>(prec));
  std::set<BigInt> hit;
  CoverageReport rep;
  for (const auto& v : samples.values) {
    if (mpz_divisible_ui_p(v.get_den().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    ++rep.p_integral;
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), v.get_den().get_mpz_t(), modulus.get_mpz_t());
    BigInt r = v.get_num() * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    hit.insert(r);
  }
  rep.classes_hit = static_cast<long>(hit.size());
  rep.classes_total = modulus.get_si();
  rep.fraction = BigRational(rep.classes_hit, rep.classes_total);
  rep.fraction.canonicalize();
  return rep;
}

} // namespace h10
