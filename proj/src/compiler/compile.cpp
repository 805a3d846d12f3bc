#include "h10/compiler/compile.hpp"

#include <stdexcept>

namespace h10 {

Compilation compile(const IntPolySystem& system, const CompileOptions& options) {
  Compilation c{system, flatten(system), Encoder(options.h), {}, {}, {}, {}};
  Encoder& enc = c.encoder;
  const TacProgram& prog = c.program;

  auto var_slot = [&](const std::string& name) {
    if (auto it = c.slot_of.find(name); it != c.slot_of.end()) return it->second;
    const int s = enc.slot(name);
    c.slot_of.emplace(name, s);
    return s;
  };

  std::vector<Formula> membership, ops, zeros;
  for (const auto& v : prog.inputs) membership.push_back(enc.encode_S_membership(var_slot(v)));
  for (const auto& op : prog.ops) {
    switch (op.kind) {
      case TacOp::Kind::lit: {
        const int dst = var_slot(op.dst);
        const int chain = enc.encode_scaled(-1, op.k, op.dst + ".lit", ops);
        ops.push_back(enc.point_equal(dst, chain));
        break;
      }
      case TacOp::Kind::scale: {
        const int dst = var_slot(op.dst);
        const int chain = enc.encode_scaled(c.slot_of.at(op.lhs), op.k, op.dst + ".scaled", ops);
        ops.push_back(enc.point_equal(dst, chain));
        break;
      }
      case TacOp::Kind::add:
        ops.push_back(enc.encode_addition(c.slot_of.at(op.lhs), c.slot_of.at(op.rhs), var_slot(op.dst)));
        break;
      case TacOp::Kind::mul:
        ops.push_back(enc.encode_multiplication(c.slot_of.at(op.lhs), c.slot_of.at(op.rhs), var_slot(op.dst)));
        break;
      case TacOp::Kind::is_zero:
        zeros.push_back(Formula::eq(MPoly::var(enc.slot_at(c.slot_of.at(op.lhs)).Z) - MPoly(1)));
        break;
    }
    if (op.kind != TacOp::Kind::is_zero) membership.push_back(enc.encode_S_membership(c.slot_of.at(op.dst)));
  }

  ExistentialFormula& f = enc.formula();
  f.body = Formula::conj({enc.slot_constraints(), Formula::conj(std::move(membership)),
                          Formula::conj(std::move(ops)), Formula::conj(std::move(zeros))});
  if (options.eliminate_constants) {
    MinimalPolynomialTable table;
    for (const char* name : {"a", "pi"}) {
      const BigRational v = *f.vars[f.vars.id(name)].value;
      table.add(name, Polynomial::from_coefficients({-v, 1}));
    }
    c.constant_roots = eliminate_constants(f, table);
  }

  CompilationReport& rep = c.report;
  rep.variable_count = f.vars.count(VarSort::field_element);
  rep.unfolded_equation_count = equation_count(f.body);
  const RingCheck ring = coefficient_ring_check(f);
  if (!ring.ok) throw std::logic_error("emitted coefficient outside the ring: " + ring.violations.front());
  rep.coefficient_ring_description = ring.description;
  if (options.fold) {
    c.folded = fold(f.body, options.combiner);
    rep.folded = true;
    rep.equation_count = 1;
    rep.max_degree = degree(*c.folded, f.vars);
  } else {
    rep.equation_count = rep.unfolded_equation_count;
    rep.max_degree = max_degree(f.body, f.vars);
  }
  return c;
}

namespace {

void substitute_all(Formula& f, int var, const MPoly& value) {
  switch (f.kind) {
    case Formula::Kind::eq: f.poly = f.poly.substitute(var, value); break;
    case Formula::Kind::gate:
      f.gate.isotropy = f.gate.isotropy.substitute(var, value);
      f.gate.pairing = f.gate.pairing.substitute(var, value);
      break;
    default:
      for (auto& ch : f.children) substitute_all(ch, var, value);
  }
}

} // namespace

std::map<int, BigRational> eliminate_constants(ExistentialFormula& f, const MinimalPolynomialTable& table) {
  std::map<int, BigRational> roots;
  std::vector<Formula> side;
  const std::size_t n = f.vars.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int v = static_cast<int>(i);
    if (f.vars[v].sort != VarSort::constant) continue;
    // replace_constants on the monomial c itself yields the fresh variable
    // and its minimal-polynomial equation.
    ConstantFreeSystem sys = replace_constants(MPoly::var(v), f.vars, table);
    const int y = sys.vars.id(f.vars[v].name + ".root");
    f.vars = std::move(sys.vars);
    substitute_all(f.body, v, MPoly::var(y));
    side.push_back(Formula::eq(sys.equations.at(1)));
    if (f.vars[v].value) roots.emplace(y, *f.vars[v].value);
  }
  f.body = Formula::conj({std::move(f.body), Formula::conj(std::move(side))});
  return roots;
}

Assignment build_witness(const Compilation& c, const std::vector<BigInt>& inputs) {
  const auto ints = interpret(c.program, inputs);
  SlotValues sv;
  for (const auto& [name, slot] : c.slot_of) sv.multiples[slot] = ints.at(name);
  Assignment a = c.encoder.witness(sv);
  for (const auto& [var, value] : c.constant_roots) a[static_cast<std::size_t>(var)] = RationalFunction(value);
  return a;
}

WitnessCheck check_witness(const Compilation& c, const Assignment& values) {
  WitnessCheck w;
  w.formula = evaluate(c.formula(), values);
  if (c.folded) w.folded = zero_status(*c.folded, values, c.formula().h);
  return w;
}

json::Json encode(const Compilation& c) {
  using json::Json;
  const ExistentialFormula& f = c.formula();
  Json vars = Json::array();
  for (std::size_t i = 0; i < f.vars.size(); ++i) {
    const VarInfo& v = f.vars[static_cast<int>(i)];
    Json j{{"name", v.name}, {"sort", to_string(v.sort)}};
    if (v.value) j["value"] = json::encode(*v.value);
    vars.push_back(j);
  }
  Json program = Json::array();
  for (const auto& op : c.program.ops) program.push_back(to_string(op));
  const CompilationReport& r = c.report;
  Json out{{"input", encode(c.system)}, {"program", program}, {"vars", vars}};
  if (c.folded) out["equation"] = encode(*c.folded, f.vars);
  else out["formula"] = encode(f.body, f.vars);
  out["report"] = Json{{"variable_count", r.variable_count},
                       {"equation_count", r.equation_count},
                       {"unfolded_equation_count", r.unfolded_equation_count},
                       {"max_degree", r.max_degree},
                       {"coefficient_ring", r.coefficient_ring_description},
                       {"folded", r.folded},
                       {"nontriviality", "each gate vector x is paired with z so that sum x_i z_i = 1"}};
  return out;
}

} // namespace h10
