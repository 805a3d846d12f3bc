#include <doctest.h>

#include "h10/compiler/compile.hpp"

#include <random>

using namespace h10;

namespace {

IntPolySystem sys(const char* text) { return parse_system(json::Json::parse(text)); }

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

struct Fixture {
  Encoder enc;
  int a, b, c;
  Fixture() : a(enc.slot("A")), b(enc.slot("B")), c(enc.slot("C")) {}

  Truth check(const Formula& frag, const SlotValues& sv) {
    const Formula all = Formula::conj({enc.slot_constraints(), frag});
    return evaluate(all, enc.witness(sv), enc.formula().h);
  }
  Truth check(const Formula& frag, long n, long m, long r) {
    SlotValues sv;
    sv.multiples = {{a, n}, {b, m}, {c, r}};
    return check(frag, sv);
  }
};

} // namespace

TEST_CASE("combine_conj and combine_disj") {
  VarTable vars;
  const MPoly x = MPoly::var(vars.add("x")), y = MPoly::var(vars.add("y"));
  const Polynomial h = default_combiner();
  const MPoly g = combine_conj(x - MPoly(2) + MPoly(1), y - MPoly(2), h);
  CHECK(g == (x - MPoly(1)).pow(2) - MPoly(13) * (y - MPoly(2)).pow(2));
  CHECK(combine_conj(MPoly(), MPoly(), h).is_zero());
  CHECK_THROWS_AS(combine_conj(x, y, Polynomial::from_coefficients({0, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(combine_conj(x, y, Polynomial(3)), std::invalid_argument);

  CHECK(combine_disj(x, y) == x * y);
  CHECK(combine_disj(x - MPoly(1), x + MPoly(1)) == x * x - MPoly(1));
  const MPoly f1 = x.pow(3) + y, f2 = x * y * y + MPoly(4);
  CHECK(combine_disj(f1, f2).degree() == f1.degree() + f2.degree());
}

TEST_CASE("combine_conj vanishes exactly on the common zeros") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coef(-4, 4), coin(0, 1);
  VarTable vars;
  const int iT = vars.add("T", VarSort::parameter);
  const MPoly T = MPoly::var(iT), x = MPoly::var(vars.add("x")), y = MPoly::var(vars.add("y"));
  auto rpoly = [&] { return MPoly(coef(rng)) * x * y + MPoly(coef(rng)) * y + MPoly(coef(rng)) * T + MPoly(coef(rng)); };
  // Both loci contain (x, y) = (T, T^2).
  const MPoly z1 = y - x * x, z2 = x - T;
  int zero = 0, nonzero = 0;
  for (int i = 0; i < 60; ++i) {
    const MPoly f1 = rpoly() * z1 + rpoly() * z2 + (coin(rng) ? rpoly() : MPoly());
    const MPoly f2 = rpoly() * z1 + rpoly() * z2 + (coin(rng) ? rpoly() : MPoly());
    Assignment at = base_assignment(vars);
    if (i % 2) {
      at[1] = RationalFunction::T();
      at[2] = RationalFunction::T().pow(2);
    } else {
      at[1] = RationalFunction(Polynomial::from_coefficients({coef(rng), 1}));
      at[2] = RationalFunction(coef(rng));
    }
    const bool both = evaluate(f1, at)->is_zero() && evaluate(f2, at)->is_zero();
    CHECK(evaluate(combine_conj(f1, f2, default_combiner()), at)->is_zero() == both);
    (both ? zero : nonzero) += 1;
  }
  CHECK(zero > 0);
  CHECK(nonzero > 0);
}

TEST_CASE("MinimalPolynomialTable and replace_constants") {
  MinimalPolynomialTable table;
  table.add("c", Polynomial::from_coefficients({-2, 0, 1}));
  table.add("e", Polynomial::from_coefficients({-2, 0, 1}));
  CHECK_THROWS_AS(table.add("r", Polynomial::from_coefficients({-4, 0, 1})), std::invalid_argument);
  const Polynomial quintic = Polynomial::from_coefficients({-2, 0, 0, 0, 0, 1});
  CHECK_THROWS_AS(table.add("q", quintic), std::invalid_argument);
  table.add("q", quintic, true);
  CHECK(table.at("q").trusted);

  VarTable vars;
  const int x = vars.add("x"), c = vars.add("c", VarSort::constant), e = vars.add("e", VarSort::constant);
  const ConstantFreeSystem out = replace_constants(MPoly::var(x, 2) - MPoly::var(c), vars, table);
  REQUIRE(out.equations.size() == 2);
  const int y = out.vars.id("c.root");
  CHECK(out.equations[0] == MPoly::var(x, 2) - MPoly::var(y));
  CHECK(out.equations[1] == MPoly::var(y, 2) - MPoly(2));
  CHECK(out.flagged.empty());

  const ConstantFreeSystem same = replace_constants(MPoly::var(x, 2) - MPoly(3), vars, table);
  CHECK(same.equations == std::vector<MPoly>{MPoly::var(x, 2) - MPoly(3)});

  const ConstantFreeSystem two = replace_constants(MPoly::var(c) * MPoly::var(e), vars, table);
  CHECK(two.equations.size() == 3);
  CHECK(two.vars.id("c.root") != two.vars.id("e.root"));

  VarTable missing;
  const int k = missing.add("k", VarSort::constant);
  CHECK_THROWS_AS(replace_constants(MPoly::var(k), missing, table), std::out_of_range);
}

TEST_CASE("system parsing") {
  const IntPolySystem s = sys(R"({"vars":["x","y"],"eqs":[[[{"x":2},1],[[0,2],"1"],[{},-5]]]})");
  CHECK(s.satisfied(ints({1, 2})));
  CHECK(s.satisfied(ints({-2, 1})));
  CHECK_FALSE(s.satisfied(ints({1, 1})));
  CHECK(brute_force_solutions(s, 20).size() == 8);
  CHECK(encode(parse_system(encode(s))) == encode(s));
  CHECK_THROWS_AS(sys(R"({"vars":["x"],"eqs":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(sys(R"({"vars":["x"],"eqs":[[[{"z":1},1]]]})"), std::invalid_argument);
  CHECK_THROWS_AS(sys(R"({"vars":["x"],"eqs":[[[{"x":1},"1/2"]]]})"), std::invalid_argument);
  CHECK_THROWS_AS(sys(R"({"vars":["x","x"],"eqs":[[[{"x":1},1]]]})"), std::invalid_argument);
}

TEST_CASE("flattening preserves integer solutions") {
  const std::vector<const char*> systems = {
      R"({"vars":["x","y"],"eqs":[[[{"x":2},1],[{"y":2},1],[{},-5]]]})",
      R"({"vars":["x","y"],"eqs":[[[{"x":1,"y":1},1],[{},-6]],[[{"x":1},1],[{"y":1},-1],[{},1]]]})",
      R"({"vars":["x","y","z"],"eqs":[[[{"x":1,"y":1},1],[{"z":1},-1]],[[{"z":1},3],[{"x":1},-2]]]})",
      R"({"vars":["x"],"eqs":[[[{"x":3},1],[{"x":1},-4]]]})",
  };
  for (const char* text : systems) {
    const IntPolySystem s = sys(text);
    const TacProgram prog = flatten(s);
    const long bound = s.variables.size() == 3 ? 8 : 20;
    std::vector<BigInt> pt(s.variables.size(), BigInt(-bound));
    std::size_t agree = 0, total = 0;
    while (true) {
      ++total;
      agree += s.satisfied(pt) == program_satisfied(prog, interpret(prog, pt));
      std::size_t i = pt.size();
      bool done = true;
      while (i-- > 0) {
        if (pt[i] < bound) {
          ++pt[i];
          done = false;
          break;
        }
        pt[i] = -bound;
      }
      if (done) break;
    }
    CHECK(agree == total);
  }
  const TacProgram p = flatten(sys(R"({"vars":["x"],"eqs":[[[{"x":2},3],[{},-12]]]})"));
  REQUIRE(p.ops.size() == 5);
  CHECK(to_string(p.ops[0]) == "_t1 = -12");
  CHECK(to_string(p.ops[1]) == "_t2 = x * x");
  CHECK(to_string(p.ops[2]) == "_t3 = 3 * _t2");
  CHECK(to_string(p.ops[3]) == "_t4 = _t1 + _t3");
  CHECK(to_string(p.ops[4]) == "_t4 == 0");
}

TEST_CASE("encode_addition") {
  Fixture f;
  const Formula add = f.enc.encode_addition(f.a, f.b, f.c);
  CHECK(f.check(add, 2, 3, 5) == Truth::holds);
  CHECK(f.check(add, 4, -4, 0) == Truth::holds);
  CHECK(f.check(add, 3, 3, 6) == Truth::holds);
  CHECK(f.check(add, 0, 7, 7) == Truth::holds);
  CHECK(f.check(add, -2, 0, -2) == Truth::holds);
  CHECK(f.check(add, 2, 3, 6) == Truth::fails);
  CHECK(f.check(add, 2, 3, -5) == Truth::fails);
  CHECK(f.check(add, 3, 3, 0) == Truth::fails);
}

TEST_CASE("encode_S_membership") {
  Fixture f;
  const Formula mem = f.enc.encode_S_membership(f.a);
  for (long n : {-7, -2, -1, 0, 1, 2, 4, 5, 9}) {
    CAPTURE(n);
    SlotValues sv;
    sv.multiples = {{f.a, n}, {f.b, 0}, {f.c, 0}};
    CHECK(f.check(mem, sv) == Truth::holds);
  }
  // P4 with the explicit witness W = P2.
  SlotValues four;
  four.multiples = {{f.a, 4}, {f.b, 0}, {f.c, 0}};
  four.halves = {{f.a, 2}};
  CHECK(f.check(mem, four) == Truth::holds);
  // Points off the multiples: no W = P_k with |k| <= 6 works.
  const RationalFunction T = RationalFunction::T();
  for (const CurvePoint& bad : {CurvePoint::affine(T + RationalFunction(1), RationalFunction(1)),
                                CurvePoint::affine(T, RationalFunction(2))}) {
    for (long k = -6; k <= 6; ++k) {
      SlotValues sv;
      sv.points = {{f.a, bad}};
      sv.multiples = {{f.b, 0}, {f.c, 0}};
      sv.halves = {{f.a, k}};
      CHECK(f.check(mem, sv) == Truth::fails);
    }
  }
}

TEST_CASE("encode_multiplication") {
  Fixture f;
  const Formula mul = f.enc.encode_multiplication(f.a, f.b, f.c);
  CHECK(f.check(mul, 2, 3, 6) == Truth::holds);
  CHECK(f.check(mul, -2, 3, -6) == Truth::holds);
  CHECK(f.check(mul, 1, 5, 5) == Truth::holds);
  CHECK(f.check(mul, -1, 4, -4) == Truth::holds);
  CHECK(f.check(mul, 0, 5, 0) == Truth::holds);
  CHECK(f.check(mul, 3, -1, -3) == Truth::holds);
  CHECK(f.check(mul, 1, 5, 4) == Truth::fails);
  CHECK(f.check(mul, 2, 3, 5) != Truth::holds);

  // (2,2,5): with every U0 candidate pair fixed in turn, the fragment fails.
  for (const auto& choice : f.enc.candidates()) {
    SlotValues sv;
    sv.multiples = {{f.a, 2}, {f.b, 2}, {f.c, 5}};
    sv.gate_choice = choice;
    CHECK(f.check(mul, sv) == Truth::fails);
  }
  SlotValues six;
  six.multiples = {{f.a, 2}, {f.b, 3}, {f.c, 6}};
  six.gate_choice = CandidatePair(0, 0);
  CHECK(f.check(mul, six) == Truth::holds);
}

TEST_CASE("compile {x - 2 = 0}") {
  const IntPolySystem s = sys(R"({"vars":["x"],"eqs":[[[{"x":1},1],[{},-2]]]})");
  const Compilation c = compile(s);
  CHECK(c.report.equation_count == equation_count(c.formula().body));
  CHECK(c.report.variable_count == c.formula().vars.count(VarSort::field_element));
  CHECK(coefficient_ring_check(c.formula()).ok);
  CHECK(check_witness(c, build_witness(c, ints({2}))).ok());
  CHECK(check_witness(c, build_witness(c, ints({3}))).formula == Truth::fails);

  CompileOptions opt;
  opt.fold = true;
  const Compilation folded = compile(s, opt);
  CHECK(folded.report.equation_count == 1);
  CHECK(folded.report.unfolded_equation_count == c.report.equation_count);
  CHECK(check_witness(folded, build_witness(folded, ints({2}))).folded == ZeroStatus::zero);
  CHECK(check_witness(folded, build_witness(folded, ints({-2}))).folded == ZeroStatus::nonzero);
}

TEST_CASE("compile end to end with a product") {
  const IntPolySystem s = sys(
      R"({"vars":["x","y","z"],"eqs":[[[{"x":1,"y":1},1],[{"z":1},-1]],[[{"x":1},1],[{},-2]],
          [[{"y":1},1],[{},-3]],[[{"z":1},1],[{},-6]]]})");
  CompileOptions opt;
  opt.fold = true;
  const Compilation c = compile(s, opt);
  const Assignment w = build_witness(c, ints({2, 3, 6}));
  const WitnessCheck chk = check_witness(c, w);
  CHECK(chk.formula == Truth::holds);
  CHECK(chk.folded == ZeroStatus::zero);
  const MulRecord& r = c.encoder.multiplications().front();
  CHECK(w[static_cast<std::size_t>(r.c3.c)].has_value());
  CHECK(check_witness(c, build_witness(c, ints({2, 3, 5}))).formula == Truth::fails);
}

TEST_CASE("fold agrees with expansion on small formulas") {
  VarTable vars;
  const MPoly x = MPoly::var(vars.add("x")), y = MPoly::var(vars.add("y"));
  const Formula f = Formula::conj({Formula::eq(x - MPoly(1)), Formula::disj({Formula::eq(y), Formula::eq(y - x)})});
  const FoldedEquation e = fold(f, default_combiner());
  CHECK(expand(e) == combine_conj(x - MPoly(1), combine_disj(y, y - x), default_combiner()));
  CHECK(degree(e, vars) == 4);
  Assignment at(2);
  at[0] = RationalFunction(1);
  at[1] = RationalFunction::T();
  CHECK(zero_status(e, at, HParams::standard()) == ZeroStatus::nonzero);
  CHECK(*value(e, at) == *evaluate(expand(e), at));
  at[1] = RationalFunction(1);
  CHECK(zero_status(e, at, HParams::standard()) == ZeroStatus::zero);
  CHECK(evaluate(f, at, HParams::standard()) == Truth::holds);
}

TEST_CASE("constant elimination keeps witnesses valid") {
  const IntPolySystem s = sys(R"({"vars":["x","y"],"eqs":[[[{"x":1,"y":1},1],[{},-4]],[[{"x":1},1],[{"y":1},-1]]]})");
  CompileOptions opt;
  opt.eliminate_constants = true;
  const Compilation c = compile(s, opt);
  CHECK(c.constant_roots.size() == 2);
  for (const auto& sol : brute_force_solutions(s, 20)) CHECK(check_witness(c, build_witness(c, sol)).ok());
  CHECK(brute_force_solutions(s, 20).size() == 2);
}

TEST_CASE("compiled output is deterministic") {
  const IntPolySystem s = sys(R"({"vars":["x","y"],"eqs":[[[{"x":2},1],[{"y":1},-4]]]})");
  CompileOptions opt;
  opt.fold = true;
  CHECK(encode(compile(s, opt)).dump() == encode(compile(s, opt)).dump());
  CHECK(encode(compile(s)).dump() == encode(compile(s)).dump());
}
