#pragma once

#include "h10/core/ratfunc.hpp"

#include <string>
#include <vector>

namespace h10 {

/// A place of Q(T): the prime T, the prime 1/T, or a monic irreducible.
class Place {
public:
  enum class Kind { at_zero, at_infinity, at_irreducible };

  static Place zero() { return Place(Kind::at_zero, Polynomial::variable()); }
  static Place infinity() { return Place(Kind::at_infinity, Polynomial()); }
  /// Throws std::invalid_argument unless p is irreducible of degree >= 1;
  /// stored monic. Degrees above 4 are accepted only when `trusted`.
  static Place irreducible(const Polynomial& p, bool trusted = false);

  Kind kind() const { return kind_; }
  /// The monic prime polynomial (T for at_zero, zero for at_infinity).
  const Polynomial& prime() const { return prime_; }
  /// Residue-field degree; 1 for infinity.
  int degree() const { return kind_ == Kind::at_infinity ? 1 : prime_.degree(); }

  std::string to_string() const;

  friend bool operator==(const Place&, const Place&) = default;

private:
  Place(Kind k, Polynomial p) : kind_(k), prime_(std::move(p)) {}
  Kind kind_;
  Polynomial prime_;
};

/// Order of f at the place. Throws std::domain_error("valuation of zero undefined").
int ord_at(const RationalFunction& f, const Place& place);
int ord_at(const Polynomial& f, const Place& place);

/// Truncated expansion sum_{k = lowest}^{precision-1} c_k * pi^k + O(pi^precision)
/// where pi is T, 1/T, or (T - c) for a degree-one prime T - c.
struct LaurentSeries {
  Place place = Place::zero();
  int lowest_exponent = 0;
  std::vector<BigRational> coefficients;  // coefficients[i] multiplies pi^(lowest_exponent + i)
  int precision = 0;

  BigRational coefficient(int exponent) const;
  /// The emitted terms as an element of Q(T).
  RationalFunction truncation() const;
  std::string to_string() const;
};

/// Requires f != 0 and precision > ord_at(f, place); at_irreducible places must have degree 1.
LaurentSeries laurent_expand(const RationalFunction& f, const Place& place, int precision);

/// Coefficient of (1/T)^0 at infinity; throws std::domain_error on a pole at infinity.
BigRational constant_term_infinity(const RationalFunction& f);

} // namespace h10
