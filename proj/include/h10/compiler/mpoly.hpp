#pragma once

// Multivariate polynomials with rational coefficients over a shared variable
// table. The transcendental T and the constants a, pi are ordinary table
// entries with a sort tag, so one type covers both bound variables and the
// coefficient ring.

#include "h10/core/json.hpp"
#include "h10/core/ratfunc.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace h10 {

enum class VarSort { field_element, parameter, constant };
std::string to_string(VarSort s);

struct VarInfo {
  std::string name;
  VarSort sort = VarSort::field_element;
  /// Value of a named constant (sort constant) over Q.
  std::optional<BigRational> value;
};

class VarTable {
public:
  /// Throws std::invalid_argument on a duplicate name.
  int add(const std::string& name, VarSort sort = VarSort::field_element,
          std::optional<BigRational> value = std::nullopt);
  /// `prefix` itself if unused, else prefix.1, prefix.2, ...
  int fresh(const std::string& prefix, VarSort sort = VarSort::field_element);
  /// -1 if absent.
  int find(const std::string& name) const;
  /// Throws std::out_of_range if absent.
  int id(const std::string& name) const;

  const VarInfo& operator[](int id) const { return vars_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return vars_.size(); }
  std::size_t count(VarSort s) const;

private:
  std::vector<VarInfo> vars_;
  std::unordered_map<std::string, int> index_;
};

/// Sorted (variable, exponent) pairs with positive exponents.
using Monomial = std::vector<std::pair<int, int>>;

class MPoly {
public:
  MPoly() = default;
  explicit MPoly(const BigRational& c);
  explicit MPoly(long c) : MPoly(BigRational(c)) {}
  static MPoly var(int id, int exp = 1);

  const std::map<Monomial, BigRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; with field_only set, only field_element variables of `vars` count.
  int degree(const VarTable* vars = nullptr, bool field_only = false) const;
  std::vector<int> variables() const;

  MPoly pow(unsigned e) const;
  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  friend MPoly operator*(const BigRational& c, MPoly a) { return a *= MPoly(c); }
  friend bool operator==(const MPoly&, const MPoly&) = default;

  /// Replaces variable `id` by `value`.
  MPoly substitute(int id, const MPoly& value) const;
  std::string to_string(const VarTable& vars) const;

private:
  void add_term(const Monomial& m, const BigRational& c);
  std::map<Monomial, BigRational> terms_;
};

/// Values for table entries; missing entries are unknown.
using Assignment = std::vector<std::optional<RationalFunction>>;

/// Assignment with parameters (T) and constants (their values) filled in.
Assignment base_assignment(const VarTable& vars);

/// nullopt when some variable of p is unassigned.
std::optional<RationalFunction> evaluate(const MPoly& p, const Assignment& values);

/// Terms as [monomial object, coefficient string] pairs.
json::Json encode(const MPoly& p, const VarTable& vars);

} // namespace h10
