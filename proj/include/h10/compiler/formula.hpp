#pragma once

#include "h10/compiler/mpoly.hpp"
#include "h10/local/hypothesis.hpp"

#include <string>
#include <vector>

namespace h10 {

/// One of the two 8-variable isotropy conditions of the gate for f:
/// sum e_i x_i^2 = 0 with the pairing sum x_i z_i = 1 forcing x != 0.
/// Judged over Q_p((1/T)): the leaf holds iff the form with entries e_i(f)
/// is isotropic there.
struct GateLeaf {
  int form = 1;   // 1: <t,-at,-1,-f><1,pi>, 2: <t,-at,-1,-af><1,pi>
  int f_var = -1;
  MPoly isotropy, pairing;
  std::vector<int> xs, zs;
};

struct Formula {
  enum class Kind { eq, conj, disj, gate };
  Kind kind = Kind::conj;
  MPoly poly;
  std::vector<Formula> children;
  GateLeaf gate;

  static Formula eq(MPoly p);
  static Formula conj(std::vector<Formula> cs);
  static Formula disj(std::vector<Formula> cs);
  static Formula gate_leaf(GateLeaf g);
};

/// Existential statement over Q(T): all field_element variables of `vars`
/// are bound; T is the transcendental parameter and a, pi named constants.
struct ExistentialFormula {
  VarTable vars;
  Formula body;
  HParams h = HParams::standard();
};

/// f1 * f2.
MPoly combine_disj(const MPoly& f1, const MPoly& f2);

/// Homogenization of h evaluated at (f1, f2). Throws std::invalid_argument
/// when h has degree < 1 or a root in Q(T) (equivalently in Q).
MPoly combine_conj(const MPoly& f1, const MPoly& f2, const Polynomial& h);

/// x^2 - 13.
Polynomial default_combiner();

template <class R>
R homogenized(const Polynomial& h, const R& x, const R& y) {
  const int k = h.degree();
  R sum = R(h.coeff(0)) * y.pow(static_cast<unsigned>(k));
  for (int i = 1; i <= k; ++i) {
    if (h.coeff(static_cast<std::size_t>(i)) == 0) continue;
    sum += R(h.coeff(static_cast<std::size_t>(i))) * x.pow(static_cast<unsigned>(i)) *
           y.pow(static_cast<unsigned>(k - i));
  }
  return sum;
}

enum class Truth { holds, fails, unknown };
std::string to_string(Truth t);

/// Gate verdict for f at the completion: whether the requested gate form is
/// isotropic over Q_p((1/T)).
bool gate_form_isotropic(const RationalFunction& f, int form, const HParams& h);

Truth evaluate(const Formula& f, const Assignment& values, const HParams& h);
Truth evaluate(const ExistentialFormula& f, const Assignment& values);

/// Polynomial equations in the tree; a gate leaf contributes two.
std::size_t equation_count(const Formula& f);
/// Largest total degree in field_element variables.
int max_degree(const Formula& f, const VarTable& vars);

struct RingCheck {
  bool ok = true;
  std::string description;
  std::vector<std::string> violations;
};

/// Every coefficient must lie in Z[T, a, pi, 1/2, 1/3]: denominators are
/// products of 2 and 3 and the only non-bound symbols are T, a and pi.
RingCheck coefficient_ring_check(const ExistentialFormula& f);

json::Json encode(const Formula& f, const VarTable& vars);

} // namespace h10
