#include <doctest.h>

#include "h10/density/density.hpp"
#include "h10/verify/oracles.hpp"

#include <iostream>

using namespace h10;

TEST_CASE("e0_multiples") {
  const auto one = e0_multiples(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == RationalPoint::affine(0, 1));
  const auto pts = e0_multiples(8);
  CHECK(pts[1] == RationalPoint::affine(BigRational(1, 4), BigRational(-9, 8)));
  CHECK(pts[2] == RationalPoint::affine(72, 611));
  for (long m = 1; m <= 8; ++m) {
    const auto o = oracle::e0_multiple(m);
    CHECK(pts[static_cast<std::size_t>(m - 1)] == RationalPoint::affine(o->first, o->second));
  }
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(height(pts[i].x) > height(pts[i - 1].x));
}

TEST_CASE("u0_sample examples") {
  const SampleSet s = u0_sample(3);
  // (P, P) with x != 0 gives 1; ((0,1), 2P) gives 0.
  auto index_of = [&](long j, long k) {
    for (std::size_t i = 0; i < s.witnesses.size(); ++i)
      if (s.witnesses[i] == std::pair<long, long>(j, k)) return static_cast<long>(i);
    return -1L;
  };
  REQUIRE(index_of(1, 2) >= 0);
  CHECK(s.values[static_cast<std::size_t>(index_of(1, 2))] == 0);
  REQUIRE(index_of(2, 2) >= 0);
  CHECK(s.values[static_cast<std::size_t>(index_of(2, 2))] == 1);
  REQUIRE(index_of(3, 2) >= 0);
  const BigRational v32 = s.values[static_cast<std::size_t>(index_of(3, 2))];
  // (72/611) * (-9/8) / (1/4)
  CHECK(v32 == BigRational(72, 611) * BigRational(-9, 8) / BigRational(1, 4));
  CHECK(v32 != 1);
  CHECK_THROWS(u0_sample(1));
}

TEST_CASE("u0 samples are ratio products of curve points") {
  const SampleSet s = u0_sample(6);
  const auto pts = e0_multiples(6);
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    const auto [j, k] = s.witnesses[i];
    const RationalPoint &P = pts[static_cast<std::size_t>(j - 1)], &Q = pts[static_cast<std::size_t>(k - 1)];
    CHECK(P.y * P.y == P.x * P.x * P.x + P.x + 1);
    CHECK(Q.y * Q.y == Q.x * Q.x * Q.x + Q.x + 1);
    CHECK(s.values[i] * P.y * Q.x == P.x * Q.y);
  }
}

TEST_CASE("dense_coverage") {
  SampleSet s{{0, 1}, {}, "test"};
  CHECK(dense_coverage(s, 3, 1).fraction >= BigRational(2, 3));
  CHECK(dense_coverage(SampleSet{}, 5, 1).fraction == 0);
  CHECK_THROWS(dense_coverage(s, 3, 0));
  for (long p : {3L, 5L}) {
    BigRational last = 0;
    for (long count = 2; count <= 14; ++count) {
      const BigRational f = dense_coverage(u0_sample(count), p, 1).fraction;
      CHECK(f >= last);
      last = f;
    }
    CHECK(last == 1);
  }
  const CoverageReport r40 = dense_coverage(u0_sample(40), 5, 1);
  CHECK(r40.fraction == 1);
}
