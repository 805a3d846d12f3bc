#include "h10/compiler/system.hpp"

#include <set>
#include <stdexcept>

namespace h10 {

void IntPolySystem::validate() const {
  if (equations.empty()) throw std::invalid_argument("system needs at least one equation");
  std::set<std::string> seen;
  for (const auto& v : variables)
    if (v.empty() || !seen.insert(v).second) throw std::invalid_argument("bad or duplicate variable name '" + v + "'");
  for (const auto& eq : equations)
    for (const auto& [m, c] : eq) {
      if (m.size() != variables.size()) throw std::invalid_argument("monomial does not match variable list");
      for (int e : m)
        if (e < 0) throw std::invalid_argument("negative exponent");
    }
}

BigInt IntPolySystem::evaluate(std::size_t eq, const std::vector<BigInt>& point) const {
  BigInt sum = 0;
  for (const auto& [m, c] : equations.at(eq)) {
    BigInt t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    sum += t;
  }
  return sum;
}

bool IntPolySystem::satisfied(const std::vector<BigInt>& point) const {
  for (std::size_t i = 0; i < equations.size(); ++i)
    if (evaluate(i, point) != 0) return false;
  return true;
}

namespace {

BigInt parse_integer(const json::Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const BigRational q = parse_rational(j.get<std::string>());
    if (q.get_den() != 1) throw std::invalid_argument("coefficient must be an integer");
    return q.get_num();
  }
  throw std::invalid_argument("coefficient must be an integer or integer string");
}

} // namespace

IntPolySystem parse_system(const json::Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("eqs"))
    throw std::invalid_argument("system needs \"vars\" and \"eqs\"");
  IntPolySystem s;
  for (const auto& v : j.at("vars")) {
    if (!v.is_string()) throw std::invalid_argument("variable names must be strings");
    s.variables.push_back(v.get<std::string>());
  }
  if (!j.at("eqs").is_array()) throw std::invalid_argument("\"eqs\" must be an array");
  for (const auto& eq : j.at("eqs")) {
    if (!eq.is_array()) throw std::invalid_argument("each equation is an array of terms");
    IntPolynomial p;
    for (const auto& term : eq) {
      if (!term.is_array() || term.size() != 2) throw std::invalid_argument("term must be [monomial, coeff]");
      IntMonomial m(s.variables.size(), 0);
      const auto& mono = term[0];
      if (mono.is_object()) {
        for (const auto& [name, e] : mono.items()) {
          std::size_t i = 0;
          while (i < s.variables.size() && s.variables[i] != name) ++i;
          if (i == s.variables.size()) throw std::invalid_argument("unknown variable '" + name + "'");
          if (!e.is_number_integer()) throw std::invalid_argument("exponent must be an integer");
          m[i] += e.get<int>();
        }
      } else if (mono.is_array()) {
        if (mono.size() != s.variables.size()) throw std::invalid_argument("exponent array length mismatch");
        for (std::size_t i = 0; i < mono.size(); ++i) {
          if (!mono[i].is_number_integer()) throw std::invalid_argument("exponent must be an integer");
          m[i] = mono[i].get<int>();
        }
      } else {
        throw std::invalid_argument("monomial must be an object or an exponent array");
      }
      p.emplace_back(std::move(m), parse_integer(term[1]));
    }
    s.equations.push_back(std::move(p));
  }
  s.validate();
  return s;
}

json::Json encode(const IntPolySystem& s) {
  json::Json eqs = json::Json::array();
  for (const auto& eq : s.equations) {
    json::Json terms = json::Json::array();
    for (const auto& [m, c] : eq) {
      json::Json mono = json::Json::object();
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) mono[s.variables[i]] = m[i];
      terms.push_back(json::Json::array({mono, to_string(c)}));
    }
    eqs.push_back(terms);
  }
  return json::Json{{"vars", s.variables}, {"eqs", eqs}};
}

namespace {

struct Flattener {
  const IntPolySystem& sys;
  TacProgram prog;
  std::set<std::string> names;
  std::map<IntMonomial, std::string> monomials;
  int counter = 0;

  std::string fresh() {
    std::string n;
    do n = "_t" + std::to_string(++counter);
    while (names.count(n));
    names.insert(n);
    prog.temps.push_back(n);
    return n;
  }

  std::string emit(TacOp::Kind k, const std::string& a, const std::string& b, const BigInt& c = 0) {
    TacOp op{k, fresh(), a, b, c};
    prog.ops.push_back(op);
    return op.dst;
  }

  // Built one factor at a time from the monomial with the last exponent lowered.
  std::string monomial(const IntMonomial& m) {
    if (auto it = monomials.find(m); it != monomials.end()) return it->second;
    std::size_t last = m.size();
    int total = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      total += m[i];
      if (m[i]) last = i;
    }
    std::string name;
    if (total == 1) {
      name = sys.variables[last];
    } else {
      IntMonomial rest = m;
      --rest[last];
      name = emit(TacOp::Kind::mul, monomial(rest), sys.variables[last]);
    }
    monomials.emplace(m, name);
    return name;
  }
};

} // namespace

TacProgram flatten(const IntPolySystem& s) {
  s.validate();
  Flattener f{s, {}, {}, {}, 0};
  f.prog.inputs = s.variables;
  f.names.insert(s.variables.begin(), s.variables.end());
  for (const auto& eq : s.equations) {
    std::map<IntMonomial, BigInt> merged;
    for (const auto& [m, c] : eq) merged[m] += c;
    std::vector<std::string> terms;
    for (const auto& [m, c] : merged) {
      if (c == 0) continue;
      bool constant = true;
      for (int e : m) constant &= e == 0;
      if (constant) {
        terms.push_back(f.emit(TacOp::Kind::lit, "", "", c));
        continue;
      }
      const std::string mono = f.monomial(m);
      terms.push_back(c == 1 ? mono : f.emit(TacOp::Kind::scale, mono, "", c));
    }
    if (terms.empty()) terms.push_back(f.emit(TacOp::Kind::lit, "", "", 0));
    std::string acc = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) acc = f.emit(TacOp::Kind::add, acc, terms[i]);
    f.prog.ops.push_back({TacOp::Kind::is_zero, "", acc, "", 0});
  }
  return f.prog;
}

std::map<std::string, BigInt> interpret(const TacProgram& prog, const std::vector<BigInt>& inputs) {
  if (inputs.size() != prog.inputs.size()) throw std::invalid_argument("input count mismatch");
  std::map<std::string, BigInt> v;
  for (std::size_t i = 0; i < inputs.size(); ++i) v[prog.inputs[i]] = inputs[i];
  for (const auto& op : prog.ops) {
    switch (op.kind) {
      case TacOp::Kind::lit: v[op.dst] = op.k; break;
      case TacOp::Kind::add: v[op.dst] = v.at(op.lhs) + v.at(op.rhs); break;
      case TacOp::Kind::mul: v[op.dst] = v.at(op.lhs) * v.at(op.rhs); break;
      case TacOp::Kind::scale: v[op.dst] = op.k * v.at(op.lhs); break;
      case TacOp::Kind::is_zero: break;
    }
  }
  return v;
}

bool program_satisfied(const TacProgram& prog, const std::map<std::string, BigInt>& values) {
  for (const auto& op : prog.ops)
    if (op.kind == TacOp::Kind::is_zero && values.at(op.lhs) != 0) return false;
  return true;
}

std::string to_string(const TacOp& op) {
  switch (op.kind) {
    case TacOp::Kind::lit: return op.dst + " = " + to_string(op.k);
    case TacOp::Kind::add: return op.dst + " = " + op.lhs + " + " + op.rhs;
    case TacOp::Kind::mul: return op.dst + " = " + op.lhs + " * " + op.rhs;
    case TacOp::Kind::scale: return op.dst + " = " + to_string(op.k) + " * " + op.lhs;
    case TacOp::Kind::is_zero: return op.lhs + " == 0";
  }
  return {};
}

std::vector<std::vector<BigInt>> brute_force_solutions(const IntPolySystem& s, long bound) {
  s.validate();
  std::vector<std::vector<BigInt>> out;
  const std::size_t n = s.variables.size();
  std::vector<BigInt> point(n, BigInt(-bound));
  if (n == 0) {
    if (s.satisfied(point)) out.push_back(point);
    return out;
  }
  while (true) {
    if (s.satisfied(point)) out.push_back(point);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (point[i] < bound) {
        ++point[i];
        break;
      }
      point[i] = -bound;
      if (i == 0) return out;
    }
  }
}

} // namespace h10
