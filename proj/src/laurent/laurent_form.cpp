#include "h10/laurent/laurent_form.hpp"

#include "h10/core/place.hpp"

#include <stdexcept>

namespace h10 {

std::string LaurentForm::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < form.dim(); ++i) {
    if (i) s += ", ";
    s += form[i].to_string("t");
  }
  return s + ">";
}

ResiduePair springer_residues(const LaurentForm& form) {
  ResiduePair r;
  for (const auto& e : form.form.entries()) {
    const int ord = ord_at(e, Place::zero());
    const BigRational lead = e.num().trailing() / e.den().trailing();
    if (lead == 0) throw std::logic_error("entry with zero residue");
    if (ord % 2 == 0)
      r.q_unit = r.q_unit + RationalForm{lead};
    else
      r.q_twisted = r.q_twisted + RationalForm{lead};
  }
  return r;
}

bool is_isotropic_laurent(const LaurentForm& form) {
  const ResiduePair r = springer_residues(form);
  return is_isotropic_local(r.q_unit, form.ctx) || is_isotropic_local(r.q_twisted, form.ctx);
}

std::pair<LaurentForm, LaurentForm> gate_forms(const RationalFunction& w, const HParams& h) {
  const RationalFunction t = RationalFunction::T();
  const RationalFunction a(h.a);
  const DiagonalForm<RationalFunction> pi_part{RationalFunction(1), RationalFunction(h.pi)};
  const DiagonalForm<RationalFunction> f1{t, -a * t, RationalFunction(-1), -w};
  const DiagonalForm<RationalFunction> f2{t, -a * t, RationalFunction(-1), -a * w};
  return {LaurentForm::of(tensor(f1, pi_part), h.ctx), LaurentForm::of(tensor(f2, pi_part), h.ctx)};
}

bool base_form_anisotropic(const HParams& h) {
  const bool direct = !is_isotropic_local(tensor(RationalForm{1, -h.a}, RationalForm{1, h.pi}), h.ctx);
  if (is_square_Qp(-1, h.ctx) && direct != !is_isotropic_local(h.form(), h.ctx))
    throw std::logic_error("<1,a><1,pi> and <1,-a><1,pi> differ although -1 is a square");
  return direct;
}

std::string to_string(AnisotropyVerdict v) {
  switch (v) {
    case AnisotropyVerdict::q1_anisotropic: return "q1_anisotropic";
    case AnisotropyVerdict::q2_anisotropic: return "q2_anisotropic";
    case AnisotropyVerdict::both: return "both";
    case AnisotropyVerdict::neither: return "neither";
  }
  return {};
}

AnisotropyVerdict lemma_anisotropic_decide(const RationalFunction& g, const HParams& h) {
  if (g.is_zero()) throw std::invalid_argument("precondition violated: g must be nonzero");
  const int ord = ord_at(g, Place::zero());
  if (ord < 0 || ord % 2 != 0)
    throw std::invalid_argument("precondition violated: ord_t(g) = " + std::to_string(ord) +
                                " is not even and nonnegative");
  if (!base_form_anisotropic(h))
    throw std::invalid_argument("precondition violated: <1,-a><1,pi> is isotropic");
  const auto [q1, q2] = gate_forms(g, h);
  const bool an1 = !is_isotropic_laurent(q1), an2 = !is_isotropic_laurent(q2);
  if (an1 && an2) return AnisotropyVerdict::both;
  if (an1) return AnisotropyVerdict::q1_anisotropic;
  if (an2) return AnisotropyVerdict::q2_anisotropic;
  return AnisotropyVerdict::neither;
}

} // namespace h10
