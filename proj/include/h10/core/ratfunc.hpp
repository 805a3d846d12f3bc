#pragma once

#include "h10/core/polynomial.hpp"

#include <string>

namespace h10 {

/// Element of Q(T) in lowest terms with a monic denominator.
class RationalFunction {
public:
  RationalFunction() : den_(1) {}
  explicit RationalFunction(const BigRational& c) : num_(c), den_(1) {}
  explicit RationalFunction(long c) : RationalFunction(BigRational(c)) {}
  explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}

  /// num/den reduced; throws std::domain_error("division by zero rational function").
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction T() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// Value at T = x; throws std::domain_error at a pole.
  BigRational operator()(const BigRational& x) const;

  /// f(1/T), i.e. the same function written in the reciprocal variable.
  RationalFunction reciprocal_substitution() const;

  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string(const char* var = "T") const;

private:
  struct Reduced {};
  RationalFunction(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

/// Canonical form of num/den (see RationalFunction).
RationalFunction ratfunc_normalize(const Polynomial& num, const Polynomial& den);

} // namespace h10
