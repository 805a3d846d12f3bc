#pragma once

#include "h10/compiler/mpoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace h10 {

class MinimalPolynomialTable {
public:
  struct Entry {
    Polynomial poly;  // monic
    bool trusted = false;  // irreducibility accepted without proof
  };

  /// Stores p made monic. Throws std::invalid_argument for degree < 1, for a
  /// reducible p, or for undecided irreducibility (degree > 4) unless `trust`.
  void add(const std::string& name, const Polynomial& p, bool trust = false);
  /// Throws std::out_of_range("no minimal polynomial for <name>").
  const Entry& at(const std::string& name) const;
  bool contains(const std::string& name) const { return entries_.count(name) != 0; }
  const std::map<std::string, Entry>& entries() const { return entries_; }

private:
  std::map<std::string, Entry> entries_;
};

struct ConstantFreeSystem {
  VarTable vars;
  std::vector<MPoly> equations;  // g first, then p_i(y_i)
  /// Constants whose table polynomial was accepted on trust.
  std::vector<std::string> flagged;
};

/// Replaces each constant-sort variable c_i in eq by a fresh field variable
/// y_i and appends p_i(y_i) = 0. Throws std::out_of_range on a missing entry.
ConstantFreeSystem replace_constants(const MPoly& eq, const VarTable& vars, const MinimalPolynomialTable& table);

} // namespace h10
