#pragma once

#include "h10/core/place.hpp"
#include "h10/curve/rational_point.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace h10 {

/// Affine point (X, Y) of the twisted curve, or O.
struct CurvePoint {
  bool infinity = true;
  RationalFunction X, Y;

  static CurvePoint O() { return {}; }
  static CurvePoint affine(RationalFunction X, RationalFunction Y) {
    return {false, std::move(X), std::move(Y)};
  }
  CurvePoint negated() const { return infinity ? *this : affine(X, -Y); }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// d(T) Y^2 = X^3 + a X + b over Q(T), with d = T^3 + aT + b so that (T, 1)
/// lies on the curve.
struct TwistedCurve {
  BigRational a = 1, b = 1;
  Polynomial d = default_twist();
  /// Largest |m| accepted by scalar_mul and psi.
  int max_multiple = 16;

  static Polynomial default_twist();
  static TwistedCurve standard(int bound = 16);

  /// Throws std::invalid_argument on a singular curve, d(0) = 0, or a twist
  /// other than T^3 + aT + b.
  void validate() const;
  bool contains(const CurvePoint& P) const;
  CurvePoint generator() const;
  /// The curve modulo T: y^2 = x^3 + a x + b over Q.
  RationalCurve reduction() const { return RationalCurve{a, b}; }
};

/// Group law, computed on v^2 = u^3 + a d^2 u + b d^3 through (u, v) = (dX, d^2 Y).
/// Throws std::invalid_argument("point not on curve").
CurvePoint add_points(const TwistedCurve& curve, const CurvePoint& P, const CurvePoint& Q);

/// m * (T, 1). Throws std::out_of_range when |m| exceeds curve.max_multiple.
CurvePoint scalar_mul(const TwistedCurve& curve, long m);

/// X_m / (T Y_m). Throws std::invalid_argument for m = 0.
RationalFunction psi(const TwistedCurve& curve, long m);

/// Coordinates evaluated at T = 0. Throws std::domain_error("not reducible at T").
RationalPoint reduce_mod_T(const TwistedCurve& curve, const CurvePoint& P);

/// Division-polynomial cache for m * (T, 1). Thread-safe; entries are
/// computed on first use and never change.
class MultiplesTable {
public:
  explicit MultiplesTable(TwistedCurve curve);

  const TwistedCurve& curve() const { return curve_; }
  CurvePoint point(long m) const;
  RationalFunction psi(long m) const;

private:
  struct Terms;
  const Terms& terms(long m) const;  // |m| >= 2
  void extend(std::size_t n) const;

  TwistedCurve curve_;
  mutable std::mutex mutex_;
  mutable std::vector<Polynomial> F_;  // reduced division polynomials F_0, F_1, ...
  mutable std::map<long, std::shared_ptr<const Terms>> cache_;
};

struct UVPair {
  RationalFunction u, v;
  long n = 0, m = 0, r = 0;
};

/// u = psi_m psi_n - psi_r + 1/(2T), v = psi_m psi_n - psi_r + 1/(3T).
/// Throws std::invalid_argument("index in {0, ±1}") for excluded indices.
UVPair uv(const TwistedCurve& curve, long n, long m, long r);
UVPair uv(const MultiplesTable& table, long n, long m, long r);

struct OrdersReport {
  int ordT_u = 0, ordT_v = 0, ordInf_u = 0, ordInf_v = 0;
  bool product_holds = false;
  /// The order pattern predicted for the index triple: T-orders -2 and
  /// (n m = r) iff some order at infinity equals 1, (n m != r) iff both are 0.
  bool pattern_holds = false;
};

OrdersReport check_orders(const TwistedCurve& curve, long n, long m, long r);
OrdersReport check_orders(const MultiplesTable& table, long n, long m, long r);

} // namespace h10
