#include <doctest.h>

#include "h10/core/json.hpp"
#include "h10/core/place.hpp"

#include <random>

using namespace h10;

namespace {

Polynomial P(std::initializer_list<long> c) {
  std::vector<BigRational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial::from_coefficients(v);
}

const Polynomial T = Polynomial::variable();

RationalFunction random_ratfunc(std::mt19937& rng, int max_deg = 4) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-9, 9);
  auto poly = [&] {
    std::vector<BigRational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    if (c.back() == 0) c.back() = 1;
    return Polynomial::from_coefficients(c);
  };
  Polynomial n = poly(), d = poly();
  if (n.is_zero()) n = Polynomial(1);
  if (d.is_zero()) d = Polynomial(1);
  return RationalFunction(n, d);
}

} // namespace

TEST_CASE("rational parsing and height") {
  CHECK(parse_rational("-6/4") == BigRational(-3, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(height(BigRational(-9, 8)) == 9);
  CHECK(to_string(BigRational(6, 4)) == "3/2");
}

TEST_CASE("kronecker product agrees with schoolbook") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(1, 60);
  for (int trial = 0; trial < 40; ++trial) {
    zpoly::ZPoly a(static_cast<std::size_t>(len(rng))), b(static_cast<std::size_t>(len(rng)));
    for (auto& c : a) {
      c = static_cast<long>(rng() % 2000001) - 1000000;
      c *= c * c;
    }
    for (auto& c : b) c = static_cast<long>(rng() % 201) - 100;
    a.back() = 3;
    b.back() = -5;
    CHECK(zpoly::mul_kronecker(a, b) == zpoly::mul_schoolbook(a, b));
  }
}

TEST_CASE("modular gcd") {
  const Polynomial f = P({1, 1, 0, 1});  // T^3 + T + 1
  const Polynomial g = P({-2, 0, 1});    // T^2 - 2
  const Polynomial h = P({3, -1});
  CHECK(gcd(f * h * h, g * h) == h.monic());
  CHECK(gcd(f, g) == Polynomial(1));
  CHECK(gcd(f.pow(5) * g, f.pow(3) * h) == f.pow(3));
}

TEST_CASE("division and roots") {
  auto [q, r] = divrem(P({-1, 0, 1}), P({-1, 1}));
  CHECK(q == P({1, 1}));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(divide_exact(P({1, 0, 1}), P({-1, 1})), std::domain_error);
  const auto roots = rational_roots(P({6, -5, 1}) * P({0, 2, 3}));
  REQUIRE(roots.size() == 4);
  CHECK(roots[0] == BigRational(-2, 3));
  CHECK(roots[1] == 0);
  CHECK(roots[3] == 3);
  CHECK(irreducibility_over_Q(P({1, 1, 0, 1})) == Irreducibility::irreducible);
  CHECK(irreducibility_over_Q(P({-2, 0, 1})) == Irreducibility::irreducible);
  CHECK(irreducibility_over_Q(P({1, 0, 0, 0, 4})) == Irreducibility::reducible);  // (2T^2+2T+1)(2T^2-2T+1)
  CHECK(irreducibility_over_Q(P({2, 0, 0, 0, 1})) == Irreducibility::irreducible);
  CHECK(irreducibility_over_Q(P({-2, 0, 1}) * P({3, 0, 1})) == Irreducibility::reducible);
}

TEST_CASE("polynomial helpers") {
  const Polynomial f = P({1, 2, 3});
  CHECK(f(BigRational(1, 2)) == BigRational(11, 4));
  CHECK(f.shifted(1) == P({6, 8, 3}));
  CHECK(f.reversed(3) == P({0, 3, 2, 1}));
  CHECK(f.derivative() == P({2, 6}));
  CHECK(f.to_string() == "3*T^2 + 2*T + 1");
}

TEST_CASE("ratfunc_normalize") {
  const RationalFunction a = ratfunc_normalize(P({-1, 0, 1}), P({-1, 1}));
  CHECK(a.num() == P({1, 1}));
  CHECK(a.den() == Polynomial(1));
  const RationalFunction b = ratfunc_normalize(P({0, 2}), P({2}));
  CHECK(b.num() == T);
  CHECK(b.den() == Polynomial(1));
  const RationalFunction c = ratfunc_normalize(Polynomial(), P({1, 1, 0, 1}));
  CHECK(c.is_zero());
  CHECK(c.den() == Polynomial(1));
  CHECK_THROWS_WITH(ratfunc_normalize(T, Polynomial()), "division by zero rational function");
  const RationalFunction d = ratfunc_normalize(P({0, 3}), P({6, 0, 4}));
  CHECK(d.den().leading() == 1);
  CHECK(d(1) == BigRational(3, 10));
}

TEST_CASE("ratfunc field arithmetic") {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    const RationalFunction f = random_ratfunc(rng), g = random_ratfunc(rng), h = random_ratfunc(rng);
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f - g) + g == f);
    if (!g.is_zero()) CHECK((f / g) * g == f);
    CHECK(f.reciprocal_substitution().reciprocal_substitution() == f);
  }
}

TEST_CASE("ord_at examples") {
  const RationalFunction t2(T * T);
  CHECK(ord_at(t2, Place::zero()) == 2);
  CHECK(ord_at(t2, Place::infinity()) == -2);
  CHECK_THROWS_WITH(ord_at(RationalFunction(), Place::zero()), "valuation of zero undefined");
  const Place p = Place::irreducible(P({1, 1, 0, 1}));
  CHECK(ord_at(RationalFunction(P({1, 1, 0, 1}).pow(3), T), p) == 3);
  CHECK_THROWS_AS(Place::irreducible(P({-1, 0, 1})), std::invalid_argument);
}

TEST_CASE("valuation laws on random samples") {
  std::mt19937 rng(3);
  const std::vector<Place> places = {Place::zero(), Place::infinity(), Place::irreducible(P({-1, 1})),
                                     Place::irreducible(P({1, 0, 1}))};
  for (int i = 0; i < 60; ++i) {
    const RationalFunction f = random_ratfunc(rng), g = random_ratfunc(rng);
    for (const auto& pl : places) {
      CHECK(ord_at(f * g, pl) == ord_at(f, pl) + ord_at(g, pl));
      const RationalFunction s = f + g;
      if (s.is_zero()) continue;
      const int a = ord_at(f, pl), b = ord_at(g, pl);
      CHECK(ord_at(s, pl) >= std::min(a, b));
      if (a != b) CHECK(ord_at(s, pl) == std::min(a, b));
    }
  }
}

TEST_CASE("degree formula over known factorizations") {
  // f = T^2 (T-1)^3 (T^2+1) / ((T+2)^4 (T^3+T+1))
  const std::vector<std::pair<Polynomial, int>> factors = {
      {T, 2}, {P({-1, 1}), 3}, {P({1, 0, 1}), 1}, {P({2, 1}), -4}, {P({1, 1, 0, 1}), -1}};
  Polynomial num(1), den(1);
  for (const auto& [p, e] : factors) (e > 0 ? num : den) *= p.pow(static_cast<unsigned>(std::abs(e)));
  const RationalFunction f(num, den);
  int sum = ord_at(f, Place::infinity());
  for (const auto& [p, e] : factors) {
    const Place pl = p == T ? Place::zero() : Place::irreducible(p);
    CHECK(ord_at(f, pl) == e);
    sum += pl.degree() * ord_at(f, pl);
  }
  CHECK(sum == 0);
}

TEST_CASE("laurent_expand examples") {
  const RationalFunction g(Polynomial(1), P({1, -1}));
  const LaurentSeries s = laurent_expand(g, Place::zero(), 3);
  CHECK(s.lowest_exponent == 0);
  CHECK(s.coefficients == std::vector<BigRational>{1, 1, 1});
  CHECK(s.to_string() == "1 + 1*T^1 + 1*T^2 + O(T^3)");

  // Oracle: long division of T by (T - 1) in descending powers gives 1 + T^-1 + T^-2 + ...
  const RationalFunction h(T, P({-1, 1}));
  const LaurentSeries si = laurent_expand(h, Place::infinity(), 2);
  CHECK(si.lowest_exponent == 0);
  CHECK(si.coefficients == std::vector<BigRational>{1, 1});
  CHECK_THROWS_AS(laurent_expand(h, Place::infinity(), 0), std::invalid_argument);

  const LaurentSeries sp = laurent_expand(RationalFunction(Polynomial(1), P({-1, 0, 1})),
                                          Place::irreducible(P({-1, 1})), 2);
  CHECK(sp.lowest_exponent == -1);
  CHECK(sp.coefficient(-1) == BigRational(1, 2));
  CHECK(sp.coefficient(0) == BigRational(-1, 4));
}

TEST_CASE("laurent truncation residual has order >= precision") {
  std::mt19937 rng(5);
  const std::vector<Place> places = {Place::zero(), Place::infinity(), Place::irreducible(P({2, 1}))};
  for (int i = 0; i < 30; ++i) {
    const RationalFunction f = random_ratfunc(rng);
    if (f.is_zero()) continue;
    for (const auto& pl : places) {
      const int prec = ord_at(f, pl) + 5;
      const LaurentSeries s = laurent_expand(f, pl, prec);
      CHECK(s.lowest_exponent == ord_at(f, pl));
      CHECK(s.coefficients.front() != 0);
      const RationalFunction rest = f - s.truncation();
      if (!rest.is_zero()) CHECK(ord_at(rest, pl) >= prec);
    }
  }
}

TEST_CASE("constant_term_infinity") {
  CHECK(constant_term_infinity(RationalFunction(P({1, 3}), T)) == 3);
  CHECK(constant_term_infinity(RationalFunction(Polynomial(1), T)) == 0);
  CHECK_THROWS_AS(constant_term_infinity(RationalFunction(T)), std::domain_error);
}

TEST_CASE("json round trip") {
  const RationalFunction f(P({1, 2}), P({3, 0, 5}));
  const auto j = json::encode(f);
  CHECK(j.dump() == R"({"num":["1/5","2/5"],"den":["3/5","0","1"]})");
  CHECK(json::decode_ratfunc(j) == f);
  CHECK_THROWS_AS(json::decode_rational(json::Json("1/0")), std::invalid_argument);
}
