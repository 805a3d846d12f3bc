#pragma once

#include "h10/compiler/constants.hpp"
#include "h10/compiler/encode.hpp"
#include "h10/compiler/fold.hpp"
#include "h10/compiler/system.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace h10 {

struct CompilationReport {
  std::size_t variable_count = 0;            // bound field_element variables
  std::size_t equation_count = 0;            // emitted equations (1 when folded)
  std::size_t unfolded_equation_count = 0;
  int max_degree = 0;
  std::string coefficient_ring_description;
  bool folded = false;
};

struct CompileOptions {
  bool fold = false;
  Polynomial combiner = default_combiner();
  HParams h = HParams::standard();
  /// Replace a and pi by fresh variables with their minimal polynomials.
  bool eliminate_constants = false;
};

struct Compilation {
  IntPolySystem system;
  TacProgram program;
  Encoder encoder;
  std::map<std::string, int> slot_of;  // integer variable -> slot
  std::optional<FoldedEquation> folded;
  /// Fresh variable -> constant it replaces (when constants were eliminated).
  std::map<int, BigRational> constant_roots;
  CompilationReport report;

  const ExistentialFormula& formula() const { return encoder.formula(); }
};

/// Throws std::invalid_argument for an empty or malformed system.
Compilation compile(const IntPolySystem& system, const CompileOptions& options = {});

/// Substitutes constant-sort variables throughout the formula and appends
/// the minimal-polynomial equations. Returns fresh variable -> constant value.
std::map<int, BigRational> eliminate_constants(ExistentialFormula& f, const MinimalPolynomialTable& table);

/// Curve-point, auxiliary and gate-parameter witnesses for an integer input
/// point (gate isotropy vectors stay unassigned; see GateLeaf).
Assignment build_witness(const Compilation& c, const std::vector<BigInt>& inputs);

struct WitnessCheck {
  Truth formula = Truth::unknown;
  std::optional<ZeroStatus> folded;
  bool ok() const { return formula == Truth::holds && (!folded || *folded == ZeroStatus::zero); }
};

WitnessCheck check_witness(const Compilation& c, const Assignment& values);

json::Json encode(const Compilation& c);

} // namespace h10
