#include <doctest.h>

#include "h10/curve/curve.hpp"
#include "h10/verify/oracles.hpp"

using namespace h10;

namespace {

const TwistedCurve E = TwistedCurve::standard();

CurvePoint from_oracle(const oracle::Point& p) {
  return p.infinity ? CurvePoint::O() : CurvePoint::affine(p.X, p.Y);
}

oracle::Point to_oracle(const CurvePoint& p) { return oracle::Point{p.infinity, p.X, p.Y}; }

} // namespace

TEST_CASE("add_points examples") {
  const CurvePoint G = E.generator();
  CHECK(add_points(E, G, CurvePoint::O()) == G);
  CHECK(add_points(E, G, G.negated()).infinity);
  const CurvePoint P2 = add_points(E, G, G);
  CHECK(E.contains(P2));
  CHECK(constant_term_infinity(P2.X / (RationalFunction::T() * P2.Y)) == 2);
  const CurvePoint bad = CurvePoint::affine(RationalFunction(1), RationalFunction(1));
  CHECK_THROWS_WITH(add_points(E, G, bad), "point not on curve");
}

TEST_CASE("add_points agrees with direct twisted-model chord-tangent") {
  const MultiplesTable table(E);
  for (long i = -4; i <= 4; ++i)
    for (long j = -4; j <= 4; ++j) {
      const CurvePoint P = table.point(i), Q = table.point(j);
      const CurvePoint S = add_points(E, P, Q);
      CHECK(S == from_oracle(oracle::twisted_add(E.d, E.a, to_oracle(P), to_oracle(Q))));
      CHECK(S == table.point(i + j));
    }
}

TEST_CASE("scalar_mul against repeated addition") {
  CHECK(scalar_mul(E, 0).infinity);
  CHECK(scalar_mul(E, 1) == E.generator());
  CHECK(scalar_mul(E, -1) == CurvePoint::affine(RationalFunction::T(), RationalFunction(-1)));
  for (long m = -10; m <= 10; ++m)
    CHECK(scalar_mul(E, m) == from_oracle(oracle::twisted_multiple(1, 1, m)));
  // A second curve of the family.
  TwistedCurve E2;
  E2.a = -2;
  E2.b = 3;
  E2.d = Polynomial::from_integers({3, -2, 0, 1});
  for (long m = 1; m <= 6; ++m) CHECK(scalar_mul(E2, m) == from_oracle(oracle::twisted_multiple(-2, 3, m)));
}

TEST_CASE("scalar bound") {
  CHECK_THROWS_AS(scalar_mul(E, 17), std::out_of_range);
  CHECK_THROWS_AS(psi(E, -17), std::out_of_range);
  CHECK_NOTHROW(psi(TwistedCurve::standard(20), 20));
}

TEST_CASE("group law associativity on multiples") {
  const MultiplesTable table(E);
  for (long i : {-3, 1, 2, 5})
    for (long j : {-2, 1, 3})
      for (long k : {-1, 2, 4}) {
        const CurvePoint P = table.point(i), Q = table.point(j), R = table.point(k);
        CHECK(add_points(E, add_points(E, P, Q), R) == add_points(E, P, add_points(E, Q, R)));
      }
}

TEST_CASE("psi examples and value at infinity") {
  CHECK(psi(E, 1) == RationalFunction(1));
  CHECK(psi(E, -1) == RationalFunction(-1));
  CHECK(constant_term_infinity(psi(E, 5)) == 5);
  CHECK(constant_term_infinity(psi(E, 3)) == 3);
  CHECK_THROWS_AS(psi(E, 0), std::invalid_argument);
  CHECK(ord_at(psi(E, 2), Place::zero()) == -1);
  const MultiplesTable table(E);
  for (long m = -16; m <= 16; ++m) {
    if (m == 0) continue;
    const RationalFunction f = table.psi(m);
    CHECK(constant_term_infinity(f) == m);
    if (m >= 2 || m <= -2) {
      CHECK(ord_at(f, Place::zero()) == -1);
      CHECK(ord_at(f, Place::infinity()) >= 0);
      const CurvePoint P = table.point(m);
      CHECK(f == P.X / (RationalFunction::T() * P.Y));
      CHECK(ord_at(P.X, Place::zero()) == 0);
      CHECK(ord_at(P.Y, Place::zero()) == 0);
    }
  }
}

TEST_CASE("reduction modulo T is a homomorphism") {
  CHECK(reduce_mod_T(E, E.generator()) == RationalPoint::affine(0, 1));
  CHECK(reduce_mod_T(E, CurvePoint::O()).infinity);
  CHECK(reduce_mod_T(E, scalar_mul(E, 2)) == RationalPoint::affine(BigRational(1, 4), BigRational(-9, 8)));
  const MultiplesTable table(E);
  for (long m = -16; m <= 16; ++m) {
    const auto expected = oracle::e0_multiple(m);
    const RationalPoint got = reduce_mod_T(E, table.point(m));
    REQUIRE(got.infinity == !expected.has_value());
    if (expected) {
      CHECK(got.x == expected->first);
      CHECK(got.y == expected->second);
    }
  }
  const CurvePoint pole = CurvePoint::affine(RationalFunction::T().inverse(), RationalFunction(0));
  CHECK_THROWS(reduce_mod_T(E, pole));
}

TEST_CASE("uv examples") {
  const UVPair p = uv(E, 2, 3, 6);
  CHECK(p.u - p.v == RationalFunction(BigRational(1, 6)) * RationalFunction::T().inverse());
  CHECK(ord_at(p.u, Place::zero()) == -2);
  CHECK((ord_at(p.u, Place::infinity()) == 1 || ord_at(p.v, Place::infinity()) == 1));
  const UVPair q = uv(E, 2, 2, 5);
  CHECK(ord_at(q.u, Place::infinity()) == 0);
  CHECK(ord_at(q.v, Place::infinity()) == 0);
  CHECK_THROWS_WITH(uv(E, 1, 2, 2), "index in {0, ±1}");
  CHECK_THROWS_WITH(uv(E, 2, 2, 0), "index in {0, ±1}");
}

TEST_CASE("check_orders examples") {
  const OrdersReport a = check_orders(E, 2, 2, 4);
  CHECK(a.product_holds);
  CHECK((a.ordInf_u == 1 || a.ordInf_v == 1));
  const OrdersReport b = check_orders(E, 3, 3, 8);
  CHECK_FALSE(b.product_holds);
  CHECK(b.ordInf_u == 0);
  CHECK(b.ordInf_v == 0);
  CHECK(a.ordT_u == -2);
  CHECK(b.ordT_v == -2);
}

TEST_CASE("orders pattern for n, m in [2..6], r in {nm, nm+1}") {
  const MultiplesTable table(TwistedCurve::standard(40));
  for (long n = 2; n <= 6; ++n)
    for (long m = 2; m <= 6; ++m)
      for (long r : {n * m, n * m + 1}) {
        const OrdersReport rep = check_orders(table, n, m, r);
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(r);
        CHECK(rep.pattern_holds);
      }
  // Negative indices follow the same pattern.
  CHECK(check_orders(table, -2, 3, -6).pattern_holds);
  CHECK(check_orders(table, -2, -3, 6).product_holds);
}
