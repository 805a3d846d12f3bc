#include "h10/verify/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace h10::oracle {

Point twisted_add(const Polynomial& d, const BigRational& a, const Point& P, const Point& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const RationalFunction D(d);
  RationalFunction lambda;
  if (P.X == Q.X) {
    if (P.Y == -Q.Y) return Point{};
    lambda = (RationalFunction(3) * P.X * P.X + RationalFunction(a)) / (RationalFunction(2) * D * P.Y);
  } else {
    lambda = (Q.Y - P.Y) / (Q.X - P.X);
  }
  // Line Y = lambda X + nu meets d Y^2 = X^3 + ..., so X1 + X2 + X3 = d lambda^2.
  Point R;
  R.infinity = false;
  R.X = D * lambda * lambda - P.X - Q.X;
  R.Y = -(P.Y + lambda * (R.X - P.X));
  return R;
}

Point twisted_multiple(const BigRational& a, const BigRational& b, long m) {
  const Polynomial d = Polynomial::from_coefficients({b, a, 0, 1});
  Point G;
  G.infinity = false;
  G.X = RationalFunction::T();
  G.Y = RationalFunction(m < 0 ? -1 : 1);
  Point acc;
  for (long i = 0; i < (m < 0 ? -m : m); ++i) acc = twisted_add(d, a, acc, G);
  return acc;
}

std::optional<std::pair<BigRational, BigRational>> e0_multiple(long m) {
  using Pt = std::optional<std::pair<BigRational, BigRational>>;
  auto add = [](const Pt& P, const Pt& Q) -> Pt {
    if (!P) return Q;
    if (!Q) return P;
    const auto& [x1, y1] = *P;
    const auto& [x2, y2] = *Q;
    BigRational l;
    if (x1 == x2) {
      if (y1 + y2 == 0) return std::nullopt;
      l = (3 * x1 * x1 + 1) / (2 * y1);
    } else {
      l = (y2 - y1) / (x2 - x1);
    }
    BigRational x3 = l * l - x1 - x2;
    BigRational y3 = -(y1 + l * (x3 - x1));
    return std::make_pair(x3, y3);
  };
  const Pt G = std::make_pair(BigRational(0), BigRational(m < 0 ? -1 : 1));
  Pt acc;
  for (long i = 0; i < (m < 0 ? -m : m); ++i) acc = add(acc, G);
  return acc;
}

namespace {

using i64 = std::int64_t;

i64 ipow(i64 p, int k) {
  i64 r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

int vp(i64 x, i64 p) {
  int v = 0;
  while (x != 0 && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

struct Search {
  std::vector<i64> a;  // coefficients reduced mod p^k, nonnegative
  i64 p;
  int k;
  i64 modulus;

  i64 value(const std::vector<i64>& x) const {
    i64 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = (s + (x[i] * x[i] % modulus) * a[i]) % modulus;
    return s;
  }

  // x solves the form mod p^j; look for an extension to mod p^k.
  bool extend(std::vector<i64>& x, int j) const {
    if (j >= k) return true;
    const i64 pj = ipow(p, j);
    const i64 c = (value(x) % (pj * p)) / pj;
    std::vector<i64> l(a.size());
    std::size_t pivot = a.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      l[i] = (2 * (a[i] % p) * (x[i] % p)) % p;
      if (l[i] != 0 && pivot == a.size()) pivot = i;
    }
    if (pivot == a.size() && c != 0) return false;
    // Enumerate delta with c + sum l_i delta_i = 0 mod p; the pivot coordinate is solved for.
    const std::size_t n = a.size();
    std::vector<i64> delta(n, 0);
    const std::vector<i64> base = x;
    i64 inv_pivot = 0;
    if (pivot < n)
      for (i64 t = 1; t < p; ++t)
        if (l[pivot] * t % p == 1) inv_pivot = t;
    for (;;) {
      if (pivot < n) {
        i64 s = c;
        for (std::size_t i = 0; i < n; ++i)
          if (i != pivot) s += l[i] * delta[i];
        delta[pivot] = ((p - s % p) % p) * inv_pivot % p;
      }
      for (std::size_t i = 0; i < n; ++i) x[i] = base[i] + pj * delta[i];
      if (extend(x, j + 1)) return true;
      std::size_t i = 0;
      for (; i < n; ++i) {
        if (i == pivot) continue;
        if (++delta[i] < p) break;
        delta[i] = 0;
      }
      if (i == n) break;
    }
    x = base;
    return false;
  }
};

} // namespace

bool has_primitive_zero_mod(const std::vector<i64>& coeffs, i64 p, int k,
                            const std::function<bool(const std::vector<i64>&)>& first_level) {
  if (coeffs.empty()) return false;
  Search s;
  s.p = p;
  s.k = std::max(k, 1);
  s.modulus = ipow(p, s.k);
  for (i64 c : coeffs) s.a.push_back(((c % s.modulus) + s.modulus) % s.modulus);
  const std::size_t n = coeffs.size();
  std::vector<i64> x(n, 0);
  for (;;) {
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++x[i] < p) break;
      x[i] = 0;
    }
    if (i == n) return false;  // wrapped around: all residues visited
    if (first_level && !first_level(x)) continue;
    if (k <= 0) return true;
    if (s.value(x) % p != 0) continue;
    std::vector<i64> y = x;
    if (s.extend(y, 1)) return true;
  }
}

i64 square_class_representative(const BigRational& q, i64 p) {
  if (q == 0) throw std::invalid_argument("zero has no square class");
  BigInt e = q.get_num() * q.get_den();
  const BigInt P(static_cast<long>(p));
  int v = 0;
  while (mpz_divisible_p(e.get_mpz_t(), P.get_mpz_t())) {
    e /= P;
    ++v;
  }
  const i64 r = static_cast<i64>(mpz_fdiv_ui(e.get_mpz_t(), static_cast<unsigned long>(p)));
  return (v % 2 == 1) ? r * p : r;
}

bool isotropic_by_search(const std::vector<BigRational>& entries, i64 p, int k) {
  std::vector<i64> c;
  for (const auto& e : entries) c.push_back(square_class_representative(e, p));
  return has_primitive_zero_mod(c, p, k);
}

int hilbert_by_search(const BigRational& a, const BigRational& b, i64 p, int k) {
  return isotropic_by_search({a, b, BigRational(-1)}, p, k) ? 1 : -1;
}

bool laurent_isotropic_by_search(const std::vector<i64>& A, const std::vector<i64>& B, i64 p, int k) {
  for (i64 c : A)
    if (vp(c, p) > 1) throw std::invalid_argument("entries must have valuation 0 or 1");
  for (i64 c : B)
    if (vp(c, p) > 1) throw std::invalid_argument("entries must have valuation 0 or 1");
  // Constant terms x0 primitive: A(x0) = 0 mod p^k and the t-part can be made zero with y = 0.
  if (has_primitive_zero_mod(A, p, k)) return true;
  if (B.empty()) return false;
  // Otherwise x0 = p^s x' (or x0 = 0) and y0 primitive. The t-coefficient
  // 2 A(x0, x1) + B(y0) can absorb exactly the multiples of p^v,
  // v = min(k, min_i v_p(a_i x0_i)); find the least achievable v.
  int best = k;
  if (!A.empty()) {
    auto unit_on_unit = [&](const std::vector<i64>& x) {
      for (std::size_t i = 0; i < A.size(); ++i)
        if (vp(A[i], p) == 0 && x[i] % p != 0) return true;
      return false;
    };
    for (int s = 1; s < k; ++s) {
      if (has_primitive_zero_mod(A, p, k - 2 * s, unit_on_unit))
        best = std::min(best, s);
      else if (has_primitive_zero_mod(A, p, k - 2 * s))
        best = std::min(best, s + 1);
    }
  }
  return has_primitive_zero_mod(B, p, best);
}

} // namespace h10::oracle
