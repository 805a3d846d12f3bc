#pragma once

// Single-equation form of a formula, kept as a DAG: disjunctions become
// products and conjunctions the homogenized combiner h~(f1, f2), so the
// expanded polynomial never has to be written out.

#include "h10/compiler/formula.hpp"

#include <optional>
#include <vector>

namespace h10 {

struct ExprNode {
  enum class Kind { poly, product, combine, gate_tag };
  Kind kind = Kind::poly;
  MPoly poly;                 // poly
  std::vector<int> children;  // product: any number; combine: two; gate_tag: one
  int form = 0;               // gate_tag
  int f_var = -1;             // gate_tag
};

struct FoldedEquation {
  std::vector<ExprNode> nodes;  // children precede parents
  int root = -1;
  Polynomial h;
};

/// Throws std::invalid_argument if h is not a valid combiner.
FoldedEquation fold(const Formula& f, const Polynomial& h);

enum class ZeroStatus { zero, nonzero, unknown };
std::string to_string(ZeroStatus s);

/// Whether the folded equation vanishes at `values`, using h~(x, y) = 0 iff
/// x = y = 0 and the integral-domain property of products. A gate tag is
/// zero iff its gate form is isotropic over Q_p((1/T)).
ZeroStatus zero_status(const FoldedEquation& e, const Assignment& values, const HParams& h);

/// Actual value; gate tags report their inner expression. For small inputs.
std::optional<RationalFunction> value(const FoldedEquation& e, const Assignment& values);

/// Expanded polynomial. For small inputs.
MPoly expand(const FoldedEquation& e);

/// Total degree in field_element variables.
int degree(const FoldedEquation& e, const VarTable& vars);

json::Json encode(const FoldedEquation& e, const VarTable& vars);

} // namespace h10
