#pragma once

#include "h10/core/json.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace h10 {

/// Exponents aligned with IntPolySystem::variables.
using IntMonomial = std::vector<int>;
using IntPolynomial = std::vector<std::pair<IntMonomial, BigInt>>;

struct IntPolySystem {
  std::vector<std::string> variables;
  std::vector<IntPolynomial> equations;

  /// Throws std::invalid_argument on no equations, duplicate or empty
  /// variable names, or misaligned monomials.
  void validate() const;
  BigInt evaluate(std::size_t eq, const std::vector<BigInt>& point) const;
  bool satisfied(const std::vector<BigInt>& point) const;
};

/// {"vars": [...], "eqs": [[[monomial, coeff], ...], ...]}; a monomial is an
/// object {"x": 2} or an exponent array, a coefficient an integer or an
/// integer string. Throws std::invalid_argument on schema violations.
IntPolySystem parse_system(const json::Json& j);
json::Json encode(const IntPolySystem& s);

/// Three-address form over integer variables.
struct TacOp {
  enum class Kind { lit, add, mul, scale, is_zero };
  Kind kind = Kind::lit;
  std::string dst, lhs, rhs;
  BigInt k;  // lit value or scale factor
};

struct TacProgram {
  std::vector<std::string> inputs;
  std::vector<std::string> temps;  // in definition order
  std::vector<TacOp> ops;
};

/// Each equation sum c_i m_i = 0 becomes monomial products (shared across
/// equations), scalings, a running sum and one is_zero test. Fresh names are
/// _t1, _t2, ... skipping any input name.
TacProgram flatten(const IntPolySystem& s);

/// Values of all inputs and temps for the given inputs.
std::map<std::string, BigInt> interpret(const TacProgram& prog, const std::vector<BigInt>& inputs);
/// All is_zero tests pass.
bool program_satisfied(const TacProgram& prog, const std::map<std::string, BigInt>& values);

std::string to_string(const TacOp& op);

/// Integer points of [-bound, bound]^n satisfying every equation, in
/// lexicographic order.
std::vector<std::vector<BigInt>> brute_force_solutions(const IntPolySystem& s, long bound);

} // namespace h10
