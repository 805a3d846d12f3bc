#pragma once

// Integers as points n*(T,1) of the twisted curve, written as slots
// (X, Y, Z) with Z = 1 exactly at O, and the +, * fragments over them.

#include "h10/compiler/formula.hpp"
#include "h10/curve/curve.hpp"
#include "h10/density/density.hpp"
#include "h10/laurent/gate.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace h10 {

struct Slot {
  std::string name;
  int X = -1, Y = -1, Z = -1;
};

/// How a slot's multiple is determined once the free slots are known.
struct SlotRule {
  enum class Kind { free, multiple, half_of, double_of };
  Kind kind = Kind::free;
  int ref = -1;  // multiple: base slot, or -1 for the generator; half_of/double_of: the member slot
  BigInt k = 1;  // multiple: factor
};

struct AddRecord {
  int a = -1, b = -1, c = -1;
  int lam = -1, w = -1;
};

struct MembershipRecord {
  int p = -1, w = -1, q = -1;
  AddRecord dbl, inc;
};

struct U0Vars {
  int c = -1, x = -1, y = -1, xp = -1, yp = -1, s = -1;
};

struct MulRecord {
  int a = -1, b = -1, c = -1;
  int psi_a = -1, psi_b = -1, psi_c = -1, tinv = -1;
  int guard_a = -1, guard_b = -1, guard_c = -1;
  int u = -1, v = -1, fu = -1, fv = -1;
  U0Vars c3, c5;
};

/// Explicit witness inputs: multiples for some slots, raw points for others,
/// for membership fragments the multiple k used for W (Q = 2W), and a fixed
/// (c3, c5) for every multiplication instead of the candidate search.
struct SlotValues {
  std::map<int, BigInt> multiples;
  std::map<int, CurvePoint> points;
  std::map<int, BigInt> halves;
  std::optional<CandidatePair> gate_choice;
};

class Encoder {
public:
  explicit Encoder(HParams h = HParams::standard(), TwistedCurve curve = TwistedCurve::standard());

  const ExistentialFormula& formula() const { return formula_; }
  ExistentialFormula& formula() { return formula_; }
  const TwistedCurve& curve() const { return curve_; }

  /// New slot with its well-formedness constraints:
  /// Z^2 = Z, ZX = 0, ZY = 0, (1 - Z)(d Y^2 - X^3 - aX - b) = 0.
  int slot(const std::string& name, SlotRule rule = {});
  const Slot& slot_at(int id) const { return slots_.at(static_cast<std::size_t>(id)); }
  std::size_t slot_count() const { return slots_.size(); }
  /// The slot constrained to (T, 1), created on first use.
  int generator_slot();
  /// Conjunction of all slot constraints so far.
  Formula slot_constraints() const;

  /// P in {n (T,1)}: P = O, P = (T,1), or W affine with Q = 2W and P in {Q, Q + (T,1)}.
  Formula encode_S_membership(int p);
  /// C = A + B over the charts A = O, B = O, A = -B, chord, tangent.
  Formula encode_addition(int a, int b, int c);
  /// C = n m (T,1) for A = n (T,1), B = m (T,1): direct cases for indices
  /// in {0, 1, -1}, otherwise the gate on u and v with c3, c5 in U0.
  Formula encode_multiplication(int a, int b, int c);
  /// Slot equal to k * base (base -1: the generator), via double-and-add.
  /// Appends the chain fragments to `out`.
  int encode_scaled(int base, const BigInt& k, const std::string& name, std::vector<Formula>& out);
  /// A = sign * B.
  Formula point_equal(int a, int b, int sign = 1) const;

  /// Fills slot coordinates and auxiliary variables. Slots whose multiple or
  /// point cannot be derived stay unassigned.
  Assignment witness(const SlotValues& values) const;

  const std::vector<MembershipRecord>& memberships() const { return memberships_; }
  const std::vector<MulRecord>& multiplications() const { return muls_; }
  const std::vector<CandidatePair>& candidates() const { return candidates_; }

private:
  MPoly V(int id) const { return MPoly::var(id); }
  MPoly X(int s) const { return V(slot_at(s).X); }
  MPoly Y(int s) const { return V(slot_at(s).Y); }
  MPoly Z(int s) const { return V(slot_at(s).Z); }
  Formula is_O(int s) const;
  Formula is_affine(int s) const;
  Formula is_generator(int s, int sign) const;
  AddRecord add_record(int a, int b, int c, const std::string& prefix);
  Formula add_formula(const AddRecord& r) const;
  U0Vars u0_vars(const std::string& prefix);
  Formula u0_membership(const U0Vars& u) const;
  std::vector<Formula> gate_leaves(int f, int tinv, const std::string& prefix);
  std::string fresh_prefix(const std::string& stem);

  ExistentialFormula formula_;
  TwistedCurve curve_;
  int T_ = -1, a_ = -1, pi_ = -1;
  MPoly d_;
  std::vector<Slot> slots_;
  std::vector<SlotRule> rules_;
  std::vector<Formula> slot_constraints_;
  std::vector<AddRecord> adds_;
  std::vector<MembershipRecord> memberships_;
  std::vector<MulRecord> muls_;
  std::map<std::string, int> counters_;
  int generator_ = -1;
  SampleSet sample_;
  std::vector<CandidatePair> candidates_;
};

} // namespace h10
