#include "h10/compiler/formula.hpp"

#include "h10/laurent/laurent_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace h10 {

Formula Formula::eq(MPoly p) {
  Formula f;
  f.kind = Kind::eq;
  f.poly = std::move(p);
  return f;
}

Formula Formula::conj(std::vector<Formula> cs) {
  Formula f;
  f.kind = Kind::conj;
  f.children = std::move(cs);
  return f;
}

Formula Formula::disj(std::vector<Formula> cs) {
  if (cs.empty()) throw std::invalid_argument("empty disjunction");
  Formula f;
  f.kind = Kind::disj;
  f.children = std::move(cs);
  return f;
}

Formula Formula::gate_leaf(GateLeaf g) {
  Formula f;
  f.kind = Kind::gate;
  f.gate = std::move(g);
  return f;
}

MPoly combine_disj(const MPoly& f1, const MPoly& f2) { return f1 * f2; }

MPoly combine_conj(const MPoly& f1, const MPoly& f2, const Polynomial& h) {
  if (h.degree() < 1) throw std::invalid_argument("combiner must have degree at least 1");
  if (!rational_roots(h).empty()) throw std::invalid_argument("combiner " + h.to_string("x") + " has a root");
  return homogenized(h, f1, f2);
}

Polynomial default_combiner() { return Polynomial::from_coefficients({-13, 0, 1}); }

std::string to_string(Truth t) {
  switch (t) {
    case Truth::holds: return "holds";
    case Truth::fails: return "fails";
    case Truth::unknown: return "unknown";
  }
  return {};
}

bool gate_form_isotropic(const RationalFunction& f, int form, const HParams& h) {
  if (f.is_zero()) return false;
  const auto [q1, q2] = gate_forms(f.reciprocal_substitution(), h);
  return is_isotropic_laurent(form == 1 ? q1 : q2);
}

Truth evaluate(const Formula& f, const Assignment& values, const HParams& h) {
  switch (f.kind) {
    case Formula::Kind::eq: {
      const auto v = evaluate(f.poly, values);
      if (!v) return Truth::unknown;
      return v->is_zero() ? Truth::holds : Truth::fails;
    }
    case Formula::Kind::gate: {
      const auto& fv = values.at(static_cast<std::size_t>(f.gate.f_var));
      if (!fv) return Truth::unknown;
      return gate_form_isotropic(*fv, f.gate.form, h) ? Truth::holds : Truth::fails;
    }
    case Formula::Kind::conj: {
      bool unknown = false;
      for (const auto& c : f.children) {
        const Truth t = evaluate(c, values, h);
        if (t == Truth::fails) return Truth::fails;
        unknown |= t == Truth::unknown;
      }
      return unknown ? Truth::unknown : Truth::holds;
    }
    case Formula::Kind::disj: {
      bool unknown = false;
      for (const auto& c : f.children) {
        const Truth t = evaluate(c, values, h);
        if (t == Truth::holds) return Truth::holds;
        unknown |= t == Truth::unknown;
      }
      return unknown ? Truth::unknown : Truth::fails;
    }
  }
  return Truth::unknown;
}

Truth evaluate(const ExistentialFormula& f, const Assignment& values) { return evaluate(f.body, values, f.h); }

std::size_t equation_count(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::eq: return 1;
    case Formula::Kind::gate: return 2;
    default: {
      std::size_t n = 0;
      for (const auto& c : f.children) n += equation_count(c);
      return n;
    }
  }
}

int max_degree(const Formula& f, const VarTable& vars) {
  switch (f.kind) {
    case Formula::Kind::eq: return f.poly.degree(&vars, true);
    case Formula::Kind::gate:
      return std::max(f.gate.isotropy.degree(&vars, true), f.gate.pairing.degree(&vars, true));
    default: {
      int d = -1;
      for (const auto& c : f.children) d = std::max(d, max_degree(c, vars));
      return d;
    }
  }
}

namespace {

bool only_2_and_3(BigInt d) {
  for (unsigned long p : {2ul, 3ul})
    while (mpz_divisible_ui_p(d.get_mpz_t(), p)) mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
  return d == 1;
}

void ring_walk(const MPoly& p, const VarTable& vars, RingCheck& out) {
  for (const auto& [m, c] : p.terms()) {
    if (!only_2_and_3(c.get_den())) {
      out.ok = false;
      out.violations.push_back("coefficient " + to_string(c) + " in " + p.to_string(vars));
    }
    for (const auto& [v, e] : m) {
      const VarInfo& info = vars[v];
      if (info.sort == VarSort::field_element) continue;
      if (info.name != "T" && info.name != "a" && info.name != "pi") {
        out.ok = false;
        out.violations.push_back("symbol " + info.name + " outside the coefficient ring");
      }
    }
  }
}

void ring_walk(const Formula& f, const VarTable& vars, RingCheck& out) {
  switch (f.kind) {
    case Formula::Kind::eq: ring_walk(f.poly, vars, out); break;
    case Formula::Kind::gate:
      ring_walk(f.gate.isotropy, vars, out);
      ring_walk(f.gate.pairing, vars, out);
      break;
    default:
      for (const auto& c : f.children) ring_walk(c, vars, out);
  }
}

} // namespace

RingCheck coefficient_ring_check(const ExistentialFormula& f) {
  RingCheck out;
  ring_walk(f.body, f.vars, out);
  std::string consts;
  for (std::size_t i = 0; i < f.vars.size(); ++i) {
    const VarInfo& v = f.vars[static_cast<int>(i)];
    if (v.sort == VarSort::constant && v.value) consts += ", " + v.name + " = " + to_string(*v.value);
  }
  out.description = "Z[T, a, pi, 1/2, 1/3]" + (consts.empty() ? std::string() : " with" + consts.substr(1)) +
                    "; T transcendental over Q";
  return out;
}

json::Json encode(const Formula& f, const VarTable& vars) {
  using json::Json;
  switch (f.kind) {
    case Formula::Kind::eq: return Json{{"eq", encode(f.poly, vars)}};
    case Formula::Kind::gate: {
      Json g;
      g["form"] = f.gate.form;
      g["f"] = vars[f.gate.f_var].name;
      g["isotropy"] = encode(f.gate.isotropy, vars);
      g["pairing"] = encode(f.gate.pairing, vars);
      g["semantics"] = "isotropy judged over Q_p((1/T))";
      return Json{{"gate", g}};
    }
    default: {
      Json cs = Json::array();
      for (const auto& c : f.children) cs.push_back(encode(c, vars));
      return Json{{f.kind == Formula::Kind::conj ? "and" : "or", cs}};
    }
  }
}

} // namespace h10
