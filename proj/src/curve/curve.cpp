#include "h10/curve/curve.hpp"

#include <stdexcept>

namespace h10 {

namespace {

RationalFunction rf(const Polynomial& p) { return RationalFunction(p); }
RationalFunction rf(const BigRational& c) { return RationalFunction(c); }

void check_bound(const TwistedCurve& curve, long m) {
  const long k = m < 0 ? -m : m;
  if (k > curve.max_multiple)
    throw std::out_of_range("multiple " + std::to_string(m) + " exceeds the configured bound " +
                            std::to_string(curve.max_multiple) + " (psi would have degree about " +
                            std::to_string(3 * k * k / 2) + " in T)");
}

} // namespace

Polynomial TwistedCurve::default_twist() { return Polynomial::from_integers({1, 1, 0, 1}); }

TwistedCurve TwistedCurve::standard(int bound) {
  TwistedCurve c;
  c.max_multiple = bound;
  return c;
}

void TwistedCurve::validate() const {
  if (4 * a * a * a + 27 * b * b == 0) throw std::invalid_argument("singular curve: 4a^3 + 27b^2 = 0");
  if (d(0) == 0) throw std::invalid_argument("twist must not vanish at T = 0");
  const Polynomial expected = Polynomial::from_coefficients({b, a, 0, 1});
  if (d != expected) throw std::invalid_argument("twist must equal T^3 + aT + b for (T, 1) to lie on the curve");
}

bool TwistedCurve::contains(const CurvePoint& P) const {
  if (P.infinity) return true;
  return rf(d) * P.Y * P.Y == P.X * P.X * P.X + rf(a) * P.X + rf(b);
}

CurvePoint TwistedCurve::generator() const { return CurvePoint::affine(RationalFunction::T(), RationalFunction(1)); }

CurvePoint add_points(const TwistedCurve& curve, const CurvePoint& P, const CurvePoint& Q) {
  if (!curve.contains(P) || !curve.contains(Q)) throw std::invalid_argument("point not on curve");
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const RationalFunction d = rf(curve.d);
  const RationalFunction d2 = d * d;
  const RationalFunction u1 = d * P.X, v1 = d2 * P.Y;
  const RationalFunction u2 = d * Q.X, v2 = d2 * Q.Y;
  RationalFunction lambda;
  if (u1 == u2) {
    if (v1 == -v2) return CurvePoint::O();
    lambda = (rf(3) * u1 * u1 + rf(curve.a) * d2) / (rf(2) * v1);
  } else {
    lambda = (v2 - v1) / (u2 - u1);
  }
  const RationalFunction u3 = lambda * lambda - u1 - u2;
  const RationalFunction v3 = lambda * (u1 - u3) - v1;
  return CurvePoint::affine(u3 / d, v3 / d2);
}

struct MultiplesTable::Terms {
  CurvePoint point;
  RationalFunction psi;
};

MultiplesTable::MultiplesTable(TwistedCurve curve) : curve_(std::move(curve)) {
  curve_.validate();
  const Polynomial x = Polynomial::variable();
  const Polynomial a(curve_.a), b(curve_.b);
  const Polynomial x2 = x * x, x3 = x2 * x;
  F_.push_back(Polynomial());
  F_.push_back(Polynomial(1));
  F_.push_back(Polynomial(2));
  F_.push_back(Polynomial(3) * x2 * x2 + Polynomial(6) * a * x2 + Polynomial(12) * b * x - a * a);
  F_.push_back(Polynomial(4) * (x3 * x3 + Polynomial(5) * a * x2 * x2 + Polynomial(20) * b * x3 -
                                Polynomial(5) * a * a * x2 - Polynomial(4) * a * b * x -
                                Polynomial(8) * b * b - a * a * a));
}

void MultiplesTable::extend(std::size_t n) const {
  const Polynomial d2 = curve_.d * curve_.d;
  const BigRational half(1, 2);
  while (F_.size() <= n) {
    const std::size_t i = F_.size();
    const std::size_t k = i / 2;
    if (i % 2 == 1) {
      Polynomial A = F_[k + 2] * F_[k].pow(3);
      Polynomial B = F_[k - 1] * F_[k + 1].pow(3);
      if (k % 2 == 0)
        A *= d2;
      else
        B *= d2;
      F_.push_back(A - B);
    } else {
      Polynomial inner = F_[k + 2] * F_[k - 1] * F_[k - 1] - F_[k - 2] * F_[k + 1] * F_[k + 1];
      F_.push_back(F_[k] * inner * half);
    }
  }
}

const MultiplesTable::Terms& MultiplesTable::terms(long m) const {
  std::lock_guard lock(mutex_);
  if (auto it = cache_.find(m); it != cache_.end()) return *it->second;
  const std::size_t k = static_cast<std::size_t>(m);
  extend(k + 2);
  const Polynomial& Fm = F_[k];
  const Polynomial Fm2 = Fm * Fm;
  const Polynomial W = F_[k + 2] * F_[k - 1] * F_[k - 1] - F_[k - 2] * F_[k + 1] * F_[k + 1];
  const Polynomial T = Polynomial::variable();
  const Polynomial& d = curve_.d;
  auto t = std::make_shared<Terms>();
  if (k % 2 == 1) {
    const Polynomial N = T * Fm2 - d * F_[k - 1] * F_[k + 1];
    t->point = CurvePoint::affine(RationalFunction(N, Fm2), RationalFunction(W, Polynomial(4) * Fm2 * Fm));
    t->psi = RationalFunction(Polynomial(4) * N * Fm, T * W);
  } else {
    const Polynomial N = T * d * Fm2 - F_[k - 1] * F_[k + 1];
    t->point = CurvePoint::affine(RationalFunction(N, d * Fm2),
                                  RationalFunction(W, Polynomial(4) * d * d * Fm2 * Fm));
    t->psi = RationalFunction(Polynomial(4) * d * N * Fm, T * W);
  }
  return *cache_.emplace(m, std::move(t)).first->second;
}

CurvePoint MultiplesTable::point(long m) const {
  check_bound(curve_, m);
  if (m == 0) return CurvePoint::O();
  const long k = m < 0 ? -m : m;
  const CurvePoint P = k == 1 ? curve_.generator() : terms(k).point;
  return m < 0 ? P.negated() : P;
}

RationalFunction MultiplesTable::psi(long m) const {
  if (m == 0) throw std::invalid_argument("psi_0 is undefined: 0 * (T, 1) = O");
  check_bound(curve_, m);
  const long k = m < 0 ? -m : m;
  RationalFunction p = k == 1 ? RationalFunction(1) : terms(k).psi;
  return m < 0 ? -p : p;
}

CurvePoint scalar_mul(const TwistedCurve& curve, long m) {
  check_bound(curve, m);
  return MultiplesTable(curve).point(m);
}

RationalFunction psi(const TwistedCurve& curve, long m) {
  if (m == 0) throw std::invalid_argument("psi_0 is undefined: 0 * (T, 1) = O");
  check_bound(curve, m);
  return MultiplesTable(curve).psi(m);
}

RationalPoint reduce_mod_T(const TwistedCurve& curve, const CurvePoint& P) {
  if (!curve.contains(P)) throw std::invalid_argument("point not on curve");
  if (P.infinity) return RationalPoint::O();
  if (P.X.den()(0) == 0 || P.Y.den()(0) == 0) throw std::domain_error("not reducible at T");
  return RationalPoint::affine(P.X(0), P.Y(0));
}

UVPair uv(const MultiplesTable& table, long n, long m, long r) {
  for (long i : {n, m, r})
    if (i >= -1 && i <= 1) throw std::invalid_argument("index in {0, ±1}");
  const RationalFunction base = table.psi(m) * table.psi(n) - table.psi(r);
  const RationalFunction tinv = RationalFunction::T().inverse();
  UVPair out;
  out.u = base + RationalFunction(BigRational(1, 2)) * tinv;
  out.v = base + RationalFunction(BigRational(1, 3)) * tinv;
  out.n = n;
  out.m = m;
  out.r = r;
  return out;
}

UVPair uv(const TwistedCurve& curve, long n, long m, long r) { return uv(MultiplesTable(curve), n, m, r); }

OrdersReport check_orders(const MultiplesTable& table, long n, long m, long r) {
  const UVPair p = uv(table, n, m, r);
  OrdersReport rep;
  rep.ordT_u = ord_at(p.u, Place::zero());
  rep.ordT_v = ord_at(p.v, Place::zero());
  rep.ordInf_u = ord_at(p.u, Place::infinity());
  rep.ordInf_v = ord_at(p.v, Place::infinity());
  rep.product_holds = n * m == r;
  const bool some_one = rep.ordInf_u == 1 || rep.ordInf_v == 1;
  const bool both_zero = rep.ordInf_u == 0 && rep.ordInf_v == 0;
  rep.pattern_holds = rep.ordT_u == -2 && rep.ordT_v == -2 && rep.product_holds == some_one &&
                      !rep.product_holds == both_zero;
  return rep;
}

OrdersReport check_orders(const TwistedCurve& curve, long n, long m, long r) {
  return check_orders(MultiplesTable(curve), n, m, r);
}

} // namespace h10
