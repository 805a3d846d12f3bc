#pragma once

// Quadratic forms over Q_p((t)). Entries are elements of Q(t); the
// RationalFunction variable is read as t throughout this header.

#include "h10/core/ratfunc.hpp"
#include "h10/local/hypothesis.hpp"

#include <string>

namespace h10 {

struct LaurentForm {
  DiagonalForm<RationalFunction> form;
  PadicContext ctx;

  LaurentForm(std::vector<RationalFunction> entries, PadicContext c)
      : form(std::move(entries)), ctx(c) {}
  static LaurentForm of(DiagonalForm<RationalFunction> f, PadicContext c) {
    return LaurentForm(f.entries(), c);
  }

  std::string to_string() const;
};

/// Residue forms: leading coefficients at t = 0 of the entries of even order
/// (q_unit) and of odd order (q_twisted). Either part may be empty.
struct ResiduePair {
  RationalForm q_unit = RationalForm::empty();
  RationalForm q_twisted = RationalForm::empty();
};

ResiduePair springer_residues(const LaurentForm& form);

/// Isotropic over Q_p((t)) iff one of the residue forms is isotropic over Q_p.
bool is_isotropic_laurent(const LaurentForm& form);

/// <t, -a t, -1, -w> (x) <1, pi> and <t, -a t, -1, -a w> (x) <1, pi>.
std::pair<LaurentForm, LaurentForm> gate_forms(const RationalFunction& w, const HParams& h);

/// Whether <1, -a> (x) <1, pi> is anisotropic over Q_p. When -1 is a square in
/// Q_p this is the same form as <1, a> (x) <1, pi> up to isometry, and the two
/// routes are checked against each other.
bool base_form_anisotropic(const HParams& h);

enum class AnisotropyVerdict { q1_anisotropic, q2_anisotropic, both, neither };
std::string to_string(AnisotropyVerdict v);

/// Classifies the two gate forms for g of even nonnegative order at t.
/// Throws std::invalid_argument when ord_t(g) is odd or negative, or when the
/// base form <1,-a><1,pi> is isotropic.
AnisotropyVerdict lemma_anisotropic_decide(const RationalFunction& g, const HParams& h);

} // namespace h10
