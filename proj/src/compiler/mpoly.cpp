#include "h10/compiler/mpoly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace h10 {

std::string to_string(VarSort s) {
  switch (s) {
    case VarSort::field_element: return "field_element";
    case VarSort::parameter: return "parameter";
    case VarSort::constant: return "constant";
  }
  return {};
}

int VarTable::add(const std::string& name, VarSort sort, std::optional<BigRational> value) {
  if (index_.count(name)) throw std::invalid_argument("duplicate variable " + name);
  const int id = static_cast<int>(vars_.size());
  vars_.push_back({name, sort, std::move(value)});
  index_.emplace(name, id);
  return id;
}

int VarTable::fresh(const std::string& prefix, VarSort sort) {
  if (!index_.count(prefix)) return add(prefix, sort);
  for (int i = 1;; ++i) {
    const std::string name = prefix + "." + std::to_string(i);
    if (!index_.count(name)) return add(name, sort);
  }
}

int VarTable::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int VarTable::id(const std::string& name) const {
  const int i = find(name);
  if (i < 0) throw std::out_of_range("unknown variable " + name);
  return i;
}

std::size_t VarTable::count(VarSort s) const {
  return static_cast<std::size_t>(
      std::count_if(vars_.begin(), vars_.end(), [s](const VarInfo& v) { return v.sort == s; }));
}

MPoly::MPoly(const BigRational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::var(int id, int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  MPoly p;
  p.terms_.emplace(exp == 0 ? Monomial{} : Monomial{{id, exp}}, BigRational(1));
  return p;
}

void MPoly::add_term(const Monomial& m, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MPoly::degree(const VarTable* vars, bool field_only) const {
  if (terms_.empty()) return -1;
  int best = 0;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (const auto& [v, e] : m)
      if (!field_only || !vars || (*vars)[v].sort == VarSort::field_element) d += e;
    best = std::max(best, d);
  }
  return best;
}

std::vector<int> MPoly::variables() const {
  std::set<int> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) s.insert(v);
  return {s.begin(), s.end()};
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

namespace {

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
    else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
    else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

} // namespace

MPoly& MPoly::operator*=(const MPoly& o) {
  MPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(mul(ma, mb), ca * cb);
  return *this = std::move(r);
}

MPoly MPoly::substitute(int id, const MPoly& value) const {
  MPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    int e = 0;
    for (const auto& ve : m) {
      if (ve.first == id) e = ve.second;
      else rest.push_back(ve);
    }
    MPoly t;
    t.terms_.emplace(rest, c);
    r += e ? t * value.pow(static_cast<unsigned>(e)) : t;
  }
  return r;
}

std::string MPoly::to_string(const VarTable& vars) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    BigRational mag = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string mono;
    for (const auto& [v, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += vars[v].name;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) s += h10::to_string(mag);
    else if (mag == 1) s += mono;
    else s += h10::to_string(mag) + "*" + mono;
  }
  return s;
}

Assignment base_assignment(const VarTable& vars) {
  Assignment a(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const VarInfo& v = vars[static_cast<int>(i)];
    if (v.sort == VarSort::parameter && v.name == "T") a[i] = RationalFunction::T();
    if (v.sort == VarSort::constant && v.value) a[i] = RationalFunction(*v.value);
  }
  return a;
}

std::optional<RationalFunction> evaluate(const MPoly& p, const Assignment& values) {
  std::map<std::pair<int, int>, RationalFunction> powers;
  RationalFunction sum;
  for (const auto& [m, c] : p.terms()) {
    RationalFunction term(c);
    for (const auto& [v, e] : m) {
      if (static_cast<std::size_t>(v) >= values.size() || !values[static_cast<std::size_t>(v)]) return std::nullopt;
      auto it = powers.find({v, e});
      if (it == powers.end()) it = powers.emplace(std::pair{v, e}, values[static_cast<std::size_t>(v)]->pow(e)).first;
      term *= it->second;
    }
    sum += term;
  }
  return sum;
}

json::Json encode(const MPoly& p, const VarTable& vars) {
  json::Json out = json::Json::array();
  for (const auto& [m, c] : p.terms()) {
    json::Json mono = json::Json::object();
    for (const auto& [v, e] : m) mono[vars[v].name] = e;
    out.push_back(json::Json::array({mono, json::encode(c)}));
  }
  return out;
}

} // namespace h10
