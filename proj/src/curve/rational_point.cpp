#include "h10/curve/rational_point.hpp"

#include <stdexcept>

namespace h10 {

std::string RationalPoint::to_string() const {
  if (infinity) return "O";
  return "(" + h10::to_string(x) + ", " + h10::to_string(y) + ")";
}

bool RationalCurve::contains(const RationalPoint& P) const {
  return P.infinity || P.y * P.y == P.x * P.x * P.x + a * P.x + b;
}

RationalPoint RationalCurve::add(const RationalPoint& P, const RationalPoint& Q) const {
  if (!contains(P) || !contains(Q)) throw std::invalid_argument("point not on curve");
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  BigRational lambda;
  if (P.x == Q.x) {
    if (P.y == -Q.y) return RationalPoint::O();
    lambda = (3 * P.x * P.x + a) / (2 * P.y);
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
  }
  BigRational x3 = lambda * lambda - P.x - Q.x;
  BigRational y3 = lambda * (P.x - x3) - P.y;
  return RationalPoint::affine(std::move(x3), std::move(y3));
}

RationalPoint RationalCurve::multiple(const RationalPoint& P, long m) const {
  RationalPoint base = m < 0 ? P.negated() : P;
  unsigned long k = m < 0 ? static_cast<unsigned long>(-m) : static_cast<unsigned long>(m);
  RationalPoint acc = RationalPoint::O();
  while (k) {
    if (k & 1) acc = add(acc, base);
    k >>= 1;
    if (k) base = add(base, base);
  }
  return acc;
}

} // namespace h10
