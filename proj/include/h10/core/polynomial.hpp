#pragma once

#include "h10/core/bigrational.hpp"
#include "h10/core/zpoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace h10 {

/// Univariate polynomial over Q in the variable T.
///
/// Stored as an integer numerator vector over one positive common
/// denominator, reduced so that gcd(content, denominator) = 1. The
/// representation is therefore canonical and equality is structural.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(const BigRational& constant);
  explicit Polynomial(long constant) : Polynomial(BigRational(constant)) {}

  /// Coefficients indexed by degree.
  static Polynomial from_coefficients(const std::vector<BigRational>& coeffs);
  static Polynomial from_integers(zpoly::ZPoly numerators, BigInt denominator = 1);
  static Polynomial monomial(const BigRational& c, std::size_t degree);
  /// The polynomial T.
  static Polynomial variable();

  bool is_zero() const { return num_.empty(); }
  bool is_constant() const { return num_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(num_.size()) - 1; }
  /// Index of the lowest nonzero coefficient (order at T = 0). Zero polynomial: -1.
  int low_degree() const;

  BigRational coeff(std::size_t i) const;
  BigRational leading() const;
  BigRational trailing() const;
  std::vector<BigRational> coefficients() const;

  const zpoly::ZPoly& numerators() const { return num_; }
  const BigInt& denominator() const { return den_; }

  /// Primitive integer part with positive leading coefficient, and the
  /// rational scalar c with *this = c * primitive.
  std::pair<BigRational, zpoly::ZPoly> split_content() const;

  BigRational operator()(const BigRational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  /// T^n * p(1/T); requires n >= degree().
  Polynomial reversed(std::size_t n) const;
  /// p(T + c).
  Polynomial shifted(const BigRational& c) const;
  /// p / T^k, requires T^k | p.
  Polynomial divide_by_power_of_T(std::size_t k) const;
  Polynomial pow(unsigned e) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const BigRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const BigRational& c) { return a *= c; }
  friend Polynomial operator*(const BigRational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form in T, highest degree first, e.g. "T^3 + T + 1".
  std::string to_string(const char* var = "T") const;

private:
  void canonicalize();

  zpoly::ZPoly num_;
  BigInt den_ = 1;
};

/// Euclidean division over Q. Throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);

/// Exact quotient a / b; throws std::domain_error if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Rational roots of a nonzero polynomial, ascending, without multiplicity.
std::vector<BigRational> rational_roots(const Polynomial& p);

enum class Irreducibility { irreducible, reducible, unknown };

/// Irreducibility over Q, decided for degree <= 4 (rational roots plus a
/// quadratic-factor search); higher degrees report `unknown` unless a
/// rational root proves reducibility.
Irreducibility irreducibility_over_Q(const Polynomial& p);

} // namespace h10
