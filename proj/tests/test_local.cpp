#include <doctest.h>

#include "h10/local/hypothesis.hpp"
#include "h10/local/quaternion.hpp"
#include "h10/verify/oracles.hpp"

#include <random>
#include <set>

using namespace h10;

namespace {

const PadicContext P13 = PadicContext::make(13);
const PadicContext P5 = PadicContext::make(5);
const PadicContext P3 = PadicContext::make(3);

BigRational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-400, 400), den(1, 60);
  long n = 0;
  while (n == 0) n = num(rng);
  BigRational q(n, den(rng));
  q.canonicalize();
  return q;
}

// Test-only 2-adic symbol for the reciprocity check.
int hilbert_2(const BigRational& a, const BigRational& b) {
  auto split = [](const BigRational& q) {
    BigInt n = q.get_num() * q.get_den();  // same square class
    int v = 0;
    while (mpz_even_p(n.get_mpz_t())) {
      n /= 2;
      ++v;
    }
    const long u = mpz_fdiv_ui(n.get_mpz_t(), 8);
    return std::pair<int, long>(v, u);
  };
  auto [al, u] = split(a);
  auto [be, v] = split(b);
  auto eps = [](long x) { return ((x - 1) / 2) % 2; };
  auto omega = [](long x) { return ((x * x - 1) / 8) % 2; };
  const long e = eps(u) * eps(v) + al * omega(v) + be * omega(u);
  return e % 2 == 0 ? 1 : -1;
}

std::set<long> odd_primes_of(const BigRational& q) {
  std::set<long> out;
  for (BigInt n : {BigInt(abs(q.get_num())), BigInt(q.get_den())})
    for (long p = 3; p <= 401; p += 2) {
      if (!mpz_probab_prime_p(BigInt(p).get_mpz_t(), 20)) continue;
      if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) out.insert(p);
    }
  return out;
}

} // namespace

TEST_CASE("padic_val examples") {
  CHECK(padic_val(13, P13) == 1);
  CHECK(padic_val(BigRational(9, 13), P13) == -1);
  CHECK(padic_val(5, P13) == 0);
  CHECK_THROWS(padic_val(0, P13));
  CHECK_THROWS_WITH(PadicContext::make(2), "2-adic symbols unsupported");
  CHECK_THROWS(PadicContext::make(9));
}

TEST_CASE("hilbert_symbol examples") {
  std::mt19937 rng(1);
  for (int i = 0; i < 20; ++i) CHECK(hilbert_symbol(1, random_rational(rng), P13) == 1);
  CHECK(hilbert_symbol(5, 7, P13) == 1);
  CHECK(hilbert_symbol(5, 13, P13) == -1);
  CHECK(oracle::hilbert_by_search(5, 13, 13, 3) == -1);
  CHECK(hilbert_symbol(-1, 13, P13) == 1);
  CHECK(hilbert_symbol(13, 13, P3) == 1);
}

TEST_CASE("hilbert_symbol agrees with the solution search") {
  std::mt19937 rng(2);
  for (const auto& ctx : {P3, P5, P13})
    for (int i = 0; i < 40; ++i) {
      const BigRational a = random_rational(rng), b = random_rational(rng);
      CHECK(hilbert_symbol(a, b, ctx) == oracle::hilbert_by_search(a, b, ctx.p));
    }
}

TEST_CASE("hilbert symmetry and bimultiplicativity") {
  std::mt19937 rng(3);
  for (const auto& ctx : {P3, P5, P13})
    for (int i = 0; i < 60; ++i) {
      const BigRational a = random_rational(rng), b1 = random_rational(rng), b2 = random_rational(rng);
      CHECK(hilbert_symbol(a, b1, ctx) == hilbert_symbol(b1, a, ctx));
      CHECK(hilbert_symbol(a, b1 * b2, ctx) == hilbert_symbol(a, b1, ctx) * hilbert_symbol(a, b2, ctx));
    }
}

TEST_CASE("product formula with a test-side 2-adic symbol") {
  std::mt19937 rng(4);
  for (int i = 0; i < 80; ++i) {
    const BigRational a = random_rational(rng), b = random_rational(rng);
    int prod = (a < 0 && b < 0) ? -1 : 1;
    prod *= hilbert_2(a, b);
    std::set<long> ps = odd_primes_of(a);
    for (long p : odd_primes_of(b)) ps.insert(p);
    for (long p : ps) prod *= hilbert_symbol(a, b, PadicContext::make(p));
    CHECK(prod == 1);
  }
}

TEST_CASE("is_isotropic_local examples") {
  CHECK(is_isotropic_local(RationalForm{1, -1}, P13));
  CHECK_FALSE(is_isotropic_local(parse_form("1,5,13,65"), P13));
  CHECK(oracle::isotropic_by_search({1, 5, 13, 65}, 13) == false);
  CHECK(is_isotropic_local(parse_form("1,1,1,1,1"), P13));
  CHECK(oracle::has_primitive_zero_mod({1, 1, 1, 1, 1}, 13, 3));
  CHECK_FALSE(is_isotropic_local(RationalForm{7}, P13));
  CHECK_THROWS_AS(parse_form("1,0,2"), std::invalid_argument);
}

TEST_CASE("is_isotropic_real examples") {
  CHECK_FALSE(is_isotropic_real(RationalForm{1, 1}));
  CHECK(is_isotropic_real(RationalForm{1, -2}));
  CHECK_FALSE(is_isotropic_real(RationalForm{-3, -5, -7}));
}

TEST_CASE("isotropy agrees with the search on all forms over {±1,±u,±p,±up}, p = 5") {
  const long p = 5, u = 2;
  const std::vector<long> pool = {1, -1, u, -u, p, -p, u * p, -u * p};
  int checked = 0;
  std::vector<std::size_t> idx;
  auto run = [&](auto&& self, std::size_t start, std::size_t dim) -> void {
    if (idx.size() == dim) {
      std::vector<BigRational> e;
      for (auto i : idx) e.emplace_back(pool[i]);
      CHECK(is_isotropic_local(RationalForm(e), P5) == oracle::isotropic_by_search(e, p));
      ++checked;
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      idx.push_back(i);
      self(self, i, dim);
      idx.pop_back();
    }
  };
  for (std::size_t dim = 2; dim <= 4; ++dim) run(run, 0, dim);
  CHECK(checked == 36 + 120 + 330);
}

TEST_CASE("tensor product layout") {
  const RationalForm q = tensor(RationalForm{1, 5}, RationalForm{1, 13});
  CHECK(q == RationalForm{1, 13, 5, 65});
  CHECK((RationalForm{1} + RationalForm{2}).dim() == 2);
  CHECK((RationalForm::empty() + RationalForm{3}) == RationalForm{3});
}

TEST_CASE("quaternion algebras") {
  CHECK(quaternion_is_split(QuaternionAlgebra(1, 7), P13));
  CHECK_FALSE(quaternion_is_split(QuaternionAlgebra(5, 13), P13));
  CHECK(quaternion_is_split(QuaternionAlgebra(5, 13), P5) == (oracle::hilbert_by_search(5, 13, 5) == 1));
  CHECK_THROWS_AS(QuaternionAlgebra(0, 1), std::invalid_argument);
  CHECK(quaternion_product_check(5, 13, 13, P13));
  std::mt19937 rng(9);
  for (const auto& ctx : {P3, P5, P13})
    for (int i = 0; i < 50; ++i) {
      const BigRational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
      CHECK(quaternion_product_check(a, b, c, ctx));
      CHECK(quaternion_product_check(1, b, c, ctx));
      CHECK_NOTHROW(quaternion_is_split(QuaternionAlgebra(a, b), ctx));
    }
}

TEST_CASE("hypothesis_h_check") {
  const HypothesisReport ok = hypothesis_h_check(HParams{P13, 5, 13});
  CHECK(ok.holds);
  CHECK(ok.a_residue_order == 4);
  CHECK(ok.root_exponent == 2);
  CHECK(ok.p_is_1_mod_4);
  CHECK(oracle::isotropic_by_search({1, 5, 13, 65}, 13) == false);
  CHECK_FALSE(hypothesis_h_check(HParams{P13, 4, 13}).holds);
  CHECK(oracle::isotropic_by_search({1, 4, 13, 52}, 13));
  CHECK_THROWS_WITH(hypothesis_h_check(HParams{P13, 5, 1}), "π must have odd valuation");
}
