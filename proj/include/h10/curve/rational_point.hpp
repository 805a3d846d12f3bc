#pragma once

#include "h10/core/bigrational.hpp"

#include <string>

namespace h10 {

/// Point of y^2 = x^3 + a x + b over Q, or the point at infinity.
struct RationalPoint {
  bool infinity = true;
  BigRational x, y;

  static RationalPoint O() { return {}; }
  static RationalPoint affine(BigRational x, BigRational y) { return {false, std::move(x), std::move(y)}; }

  RationalPoint negated() const { return infinity ? *this : affine(x, -y); }
  std::string to_string() const;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// Short Weierstrass curve over Q; the default is E0: y^2 = x^3 + x + 1.
struct RationalCurve {
  BigRational a = 1, b = 1;

  bool contains(const RationalPoint& P) const;
  /// Chord-tangent sum; throws std::invalid_argument("point not on curve").
  RationalPoint add(const RationalPoint& P, const RationalPoint& Q) const;
  RationalPoint multiple(const RationalPoint& P, long m) const;
};

} // namespace h10
