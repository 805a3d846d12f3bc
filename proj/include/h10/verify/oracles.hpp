#pragma once

// Reference computations used by tests and the acceptance suite. Each one is
// written from first principles and shares no code path with the routine it
// checks.

#include "h10/core/ratfunc.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace h10::oracle {

/// Affine point or O, coordinates in Q(T).
struct Point {
  bool infinity = true;
  RationalFunction X, Y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Chord-tangent directly on d Y^2 = X^3 + a X + b (no change of model).
Point twisted_add(const Polynomial& d, const BigRational& a, const Point& P, const Point& Q);
/// m * (T, 1) by repeated twisted_add on d = T^3 + aT + b.
Point twisted_multiple(const BigRational& a, const BigRational& b, long m);

/// m * (0, 1) on y^2 = x^3 + x + 1 over Q by repeated chord-tangent addition;
/// nullopt stands for O.
std::optional<std::pair<BigRational, BigRational>> e0_multiple(long m);

/// Exhaustive search for x mod p^k with sum a_i x_i^2 = 0 mod p^k and some
/// x_i a unit. `first_level` optionally restricts the residues mod p.
bool has_primitive_zero_mod(const std::vector<std::int64_t>& coeffs, std::int64_t p, int k,
                            const std::function<bool(const std::vector<std::int64_t>&)>& first_level = {});

/// Integer representative of the Q_p square class of q with valuation 0 or 1.
std::int64_t square_class_representative(const BigRational& q, std::int64_t p);

/// Isotropy over Q_p by primitive-zero search mod p^k after square-class reduction.
bool isotropic_by_search(const std::vector<BigRational>& entries, std::int64_t p, int k = 4);

/// Hilbert symbol from solvability of z^2 = a x^2 + b y^2 mod p^k.
int hilbert_by_search(const BigRational& a, const BigRational& b, std::int64_t p, int k = 4);

/// Isotropy of A(x) + t B(y) over Q_p((t)) (A, B integer diagonal forms with
/// entries of valuation 0 or 1) by searching zeros of x = x0 + t x1, y = y0 + t y1
/// modulo (p^k, t^2) that are primitive in the constant terms.
bool laurent_isotropic_by_search(const std::vector<std::int64_t>& A, const std::vector<std::int64_t>& B,
                                 std::int64_t p, int k = 4);

} // namespace h10::oracle
