#include "h10/compiler/constants.hpp"

#include <stdexcept>

namespace h10 {

void MinimalPolynomialTable::add(const std::string& name, const Polynomial& p, bool trust) {
  if (p.degree() < 1) throw std::invalid_argument("minimal polynomial of " + name + " must have degree >= 1");
  switch (irreducibility_over_Q(p)) {
    case Irreducibility::reducible:
      throw std::invalid_argument("minimal polynomial of " + name + " is reducible: " + p.to_string("y"));
    case Irreducibility::unknown:
      if (!trust) throw std::invalid_argument("irreducibility of " + p.to_string("y") + " undecided; pass trust");
      entries_[name] = {p.monic(), true};
      return;
    case Irreducibility::irreducible:
      entries_[name] = {p.monic(), false};
      return;
  }
}

const MinimalPolynomialTable::Entry& MinimalPolynomialTable::at(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw std::out_of_range("no minimal polynomial for " + name);
  return it->second;
}

ConstantFreeSystem replace_constants(const MPoly& eq, const VarTable& vars, const MinimalPolynomialTable& table) {
  ConstantFreeSystem out;
  // Copy the table so that ids in eq stay valid; constants keep their slot
  // but no longer occur anywhere.
  out.vars = vars;
  MPoly g = eq;
  std::vector<MPoly> side;
  for (int v : eq.variables()) {
    if (vars[v].sort != VarSort::constant) continue;
    const auto& entry = table.at(vars[v].name);
    const int y = out.vars.fresh(vars[v].name + ".root");
    g = g.substitute(v, MPoly::var(y));
    MPoly p;
    for (int i = 0; i <= entry.poly.degree(); ++i)
      p += MPoly(entry.poly.coeff(static_cast<std::size_t>(i))) * MPoly::var(y, i);
    side.push_back(std::move(p));
    if (entry.trusted) out.flagged.push_back(vars[v].name);
  }
  out.equations.push_back(std::move(g));
  for (auto& p : side) out.equations.push_back(std::move(p));
  return out;
}

} // namespace h10
