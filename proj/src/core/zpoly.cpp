#include "h10/core/zpoly.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace h10::zpoly {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

constexpr std::size_t kKroneckerThreshold = 12;

std::size_t max_bits(const ZPoly& a) {
  std::size_t bits = 1;
  for (const auto& c : a) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

std::size_t bit_length(std::size_t n) {
  std::size_t b = 0;
  while (n) {
    ++b;
    n >>= 1;
  }
  return b;
}

BigInt pack(const BigInt* c, std::size_t n, std::size_t k) {
  if (n == 1) return c[0];
  const std::size_t m = n / 2;
  BigInt lo = pack(c, m, k);
  BigInt hi = pack(c + m, n - m, k);
  mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), k * m);
  return lo + hi;
}

// Inverse of pack for signed digits bounded by 2^(k-3) in magnitude.
void unpack(const BigInt& v, std::size_t n, std::size_t k, BigInt* out) {
  if (n == 1) {
    out[0] = v;
    return;
  }
  const std::size_t m = n / 2;
  const std::size_t shift = k * m;
  BigInt q, r;
  mpz_fdiv_q_2exp(q.get_mpz_t(), v.get_mpz_t(), shift);
  mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), shift);
  if (mpz_tstbit(r.get_mpz_t(), shift - 1)) {
    BigInt full;
    mpz_setbit(full.get_mpz_t(), shift);
    r -= full;
    q += 1;
  }
  unpack(r, m, k, out);
  unpack(q, n - m, k, out + m);
}

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

ModPoly reduce(const ZPoly& a, u64 p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), static_cast<unsigned long>(p));
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// In-place a <- a mod b, b nonzero.
void rem_mod(ModPoly& a, const ModPoly& b, u64 p) {
  const std::size_t db = b.size() - 1;
  const u64 inv_lead = inv_mod(b.back(), p);
  while (a.size() > db) {
    const u64 q = a.back() * inv_lead % p;
    const std::size_t off = a.size() - 1 - db;
    if (q != 0) {
      for (std::size_t j = 0; j <= db; ++j) {
        const u64 t = q * b[j] % p;
        a[off + j] = (a[off + j] + p - t) % p;
      }
    }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    rem_mod(a, b, p);
    std::swap(a, b);
  }
  if (a.empty()) return a;
  const u64 inv_lead = inv_mod(a.back(), p);
  for (auto& c : a) c = c * inv_lead % p;
  return a;
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d : {2u, 3u, 5u, 7u})
    if (n % d == 0) return n == d;
  // Deterministic Miller-Rabin for 32-bit inputs.
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 7ull, 61ull}) {
    if (a % n == 0) continue;
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

} // namespace

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

ZPoly scale(const ZPoly& a, const BigInt& c) {
  if (c == 0) return {};
  ZPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

ZPoly mul_schoolbook(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

ZPoly mul_kronecker(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t k =
      max_bits(a) + max_bits(b) + bit_length(std::min(a.size(), b.size())) + 3;
  const BigInt prod = pack(a.data(), a.size(), k) * pack(b.data(), b.size(), k);
  ZPoly r(a.size() + b.size() - 1);
  unpack(prod, r.size(), k, r.data());
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (std::min(a.size(), b.size()) < kKroneckerThreshold) return mul_schoolbook(a, b);
  return mul_kronecker(a, b);
}

BigInt content(const ZPoly& a) {
  BigInt g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& a) {
  if (a.empty()) return {};
  BigInt g = content(a);
  if (a.back() < 0) g = -g;
  ZPoly r(a);
  if (g != 1)
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  const std::size_t db = b.size() - 1;
  ZPoly rem(a);
  ZPoly q(a.size() - db);
  const BigInt& lead = b.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt& top = rem[i + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j)
      mpz_submul(rem[i + j].get_mpz_t(), q[i].get_mpz_t(), b[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < db; ++i)
    if (rem[i] != 0) return std::nullopt;
  trim(q);
  return q;
}

std::span<const std::uint32_t> word_primes(std::size_t count) {
  static std::mutex mutex;
  static std::vector<std::uint32_t> primes;
  std::lock_guard lock(mutex);
  std::uint32_t candidate = primes.empty() ? 2147483647u : primes.back() - 2;
  while (primes.size() < count) {
    if (is_prime_u32(candidate)) primes.push_back(candidate);
    candidate -= 2;
  }
  return {primes.data(), count};
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  const ZPoly A = primitive_part(a);
  const ZPoly B = primitive_part(b);
  if (A.size() == 1 || B.size() == 1) return ZPoly{1};

  BigInt gamma;
  mpz_gcd(gamma.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());

  int best = std::min(degree(A), degree(B)) + 1;
  ZPoly image;   // CRT image of gamma * gcd, reduced modulo `modulus`
  BigInt modulus;
  ZPoly previous;
  bool have_previous = false;

  for (std::size_t batch = 64;; batch *= 2) {
    const auto primes = word_primes(batch);
    for (std::size_t idx = batch == 64 ? 0 : batch / 2; idx < primes.size(); ++idx) {
      const u64 p = primes[idx];
      if (mpz_fdiv_ui(A.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(B.back().get_mpz_t(), p) == 0)
        continue;
      ModPoly g = gcd_mod(reduce(A, p), reduce(B, p), p);
      const int dg = static_cast<int>(g.size()) - 1;
      if (dg == 0) return ZPoly{1};
      if (dg > best) continue;  // unlucky prime
      const u64 gm = mpz_fdiv_ui(gamma.get_mpz_t(), p);
      for (auto& c : g) c = c * gm % p;

      if (dg < best) {
        best = dg;
        image.assign(g.size(), 0);
        for (std::size_t i = 0; i < g.size(); ++i) image[i] = static_cast<unsigned long>(g[i]);
        modulus = static_cast<unsigned long>(p);
        have_previous = false;
      } else {
        // image <- image + modulus * ((g - image) * modulus^{-1} mod p)
        const u64 minv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
        for (std::size_t i = 0; i < g.size(); ++i) {
          const u64 cur = mpz_fdiv_ui(image[i].get_mpz_t(), p);
          const u64 delta = (g[i] + p - cur) % p * minv % p;
          if (delta) image[i] += modulus * static_cast<unsigned long>(delta);
        }
        modulus *= static_cast<unsigned long>(p);
      }

      const BigInt half = modulus / 2;
      ZPoly symmetric(image);
      for (auto& c : symmetric)
        if (c > half) c -= modulus;
      if (have_previous && symmetric == previous) {
        ZPoly candidate = primitive_part(symmetric);
        if (divide_exact(A, candidate) && divide_exact(B, candidate)) return candidate;
      }
      previous = std::move(symmetric);
      have_previous = true;
    }
  }
}

} // namespace h10::zpoly
