#include "h10/verify/suite.hpp"

#include "h10/compiler/compile.hpp"
#include "h10/core/place.hpp"
#include "h10/local/quaternion.hpp"
#include "h10/verify/oracles.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace h10 {

bool SuiteReport::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

namespace {

using Outcome = std::optional<std::string>;

std::string str(const BigRational& q) { return to_string(q); }

Outcome psi_at_infinity(std::string& detail) {
  const MultiplesTable table(TwistedCurve::standard(12));
  for (long m = -12; m <= 12; ++m) {
    if (m == 0) continue;
    const BigRational c = constant_term_infinity(table.psi(m));
    if (c != m) return "psi_" + std::to_string(m) + " at infinity = " + str(c);
  }
  detail = "24 indices";
  return std::nullopt;
}

Outcome orders_pattern(std::string& detail) {
  const MultiplesTable table(TwistedCurve::standard(40));
  int checked = 0;
  for (long n = 2; n <= 6; ++n)
    for (long m = 2; m <= 6; ++m)
      for (long r : {n * m, n * m + 1, n * m - 1}) {
        const OrdersReport o = check_orders(table, n, m, r);
        ++checked;
        if (!o.pattern_holds) {
          std::ostringstream s;
          s << "(n,m,r) = (" << n << "," << m << "," << r << "): ordT = " << o.ordT_u << "," << o.ordT_v
            << " ordInf = " << o.ordInf_u << "," << o.ordInf_v;
          return s.str();
        }
      }
  detail = std::to_string(checked) + " triples";
  return std::nullopt;
}

Outcome reduction_homomorphism(std::string& detail) {
  const TwistedCurve curve = TwistedCurve::standard(12);
  for (long m = -12; m <= 12; ++m) {
    if (m == 0) continue;
    const RationalPoint got = reduce_mod_T(curve, scalar_mul(curve, m));
    const auto want = oracle::e0_multiple(m);
    const bool same = want ? (!got.infinity && got.x == want->first && got.y == want->second) : got.infinity;
    if (!same) return "m = " + std::to_string(m) + ": reduction " + got.to_string();
  }
  detail = "24 multiples";
  return std::nullopt;
}

BigRational random_rational(std::mt19937& rng, long p) {
  std::uniform_int_distribution<long> unit(1, 60), val(-2, 2), sgn(0, 1);
  BigRational q(unit(rng));
  while (q.get_num() % p == 0) q = unit(rng);
  for (int e = val(rng); e > 0; --e) q *= p;
  for (int e = val(rng); e < 0; ++e) q /= p;
  if (sgn(rng)) q = -q;
  q.canonicalize();
  return q;
}

Outcome hilbert_laws(std::string& detail) {
  std::mt19937 rng(101);
  int pairs = 0;
  for (long p : {3, 5, 13}) {
    const PadicContext ctx = PadicContext::make(p);
    for (int i = 0; i < 200; ++i) {
      const BigRational a = random_rational(rng, p), b = random_rational(rng, p), c = random_rational(rng, p);
      const int ab = hilbert_symbol(a, b, ctx);
      if (ab != hilbert_symbol(b, a, ctx)) return "symmetry fails at p=" + std::to_string(p) + " a=" + str(a) + " b=" + str(b);
      if (hilbert_symbol(a, b * c, ctx) != ab * hilbert_symbol(a, c, ctx))
        return "bimultiplicativity fails at p=" + std::to_string(p) + " a=" + str(a) + " b=" + str(b) + " c=" + str(c);
      ++pairs;
    }
  }
  std::uniform_int_distribution<int> pick(0, 2);
  for (int i = 0; i < 50; ++i) {
    const long p = std::vector<long>{3, 5, 13}[static_cast<std::size_t>(pick(rng))];
    const BigRational a = random_rational(rng, p), b = random_rational(rng, p), c = random_rational(rng, p);
    if (!quaternion_product_check(a, b, c, PadicContext::make(p)))
      return "product check fails at p=" + std::to_string(p) + " (" + str(a) + "," + str(b) + "," + str(c) + ")";
  }
  detail = std::to_string(pairs) + " pairs, 50 triples";
  return std::nullopt;
}

// Multisets of size `dim` drawn from `pool`.
void multisets(const std::vector<long>& pool, int dim, std::size_t start, std::vector<long>& cur,
               const std::function<void(const std::vector<long>&)>& f) {
  if (static_cast<int>(cur.size()) == dim) {
    f(cur);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    multisets(pool, dim, i, cur, f);
    cur.pop_back();
  }
}

Outcome isotropy_agreement(std::string& detail) {
  Outcome bad;
  long forms = 0;
  for (long p : {5, 13}) {
    const PadicContext ctx = PadicContext::make(p);
    const long u = 2;  // a nonresidue mod 5 and mod 13
    const std::vector<long> pool = {1, -1, u, -u, p, -p, u * p, -u * p};
    for (int dim = 2; dim <= 5 && !bad; ++dim) {
      std::vector<long> cur;
      multisets(pool, dim, 0, cur, [&](const std::vector<long>& e) {
        if (bad) return;
        std::vector<BigRational> entries(e.begin(), e.end());
        const bool got = is_isotropic_local(RationalForm(entries), ctx);
        const bool want = dim >= 5 ? true : oracle::isotropic_by_search(entries, p, 4);
        ++forms;
        if (got != want) {
          std::string s = "p=" + std::to_string(p) + " <";
          for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
          bad = s + "> local " + (got ? "isotropic" : "anisotropic");
        }
      });
    }
  }
  detail = std::to_string(forms) + " forms";
  return bad;
}

Outcome quaternion_split(std::string& detail) {
  std::mt19937 rng(202);
  for (long p : {5, 13}) {
    const PadicContext ctx = PadicContext::make(p);
    for (int i = 0; i < 100; ++i) {
      const QuaternionAlgebra A(random_rational(rng, p), random_rational(rng, p));
      const bool by_norm = is_isotropic_local(A.norm_form(), ctx);
      const bool by_symbol = hilbert_symbol(A.alpha, A.beta, ctx) == 1;
      if (by_norm != by_symbol || quaternion_is_split(A, ctx) != by_symbol)
        return "(" + str(A.alpha) + "," + str(A.beta) + ") at p=" + std::to_string(p);
    }
  }
  detail = "200 algebras";
  return std::nullopt;
}

Outcome hypothesis_instance(std::string& detail) {
  const PadicContext ctx = PadicContext::make(13);
  const HypothesisReport yes = hypothesis_h_check(HParams{ctx, 5, 13});
  const HypothesisReport no = hypothesis_h_check(HParams{ctx, 4, 13});
  const bool oracle_yes = !oracle::isotropic_by_search({1, 5, 13, 65}, 13, 4);
  const bool oracle_no = !oracle::isotropic_by_search({1, 4, 13, 52}, 13, 4);
  if (!yes.holds || !oracle_yes) return "(13,5,13): check " + std::to_string(yes.holds) + " oracle " + std::to_string(oracle_yes);
  if (no.holds || oracle_no) return "(13,4,13): check " + std::to_string(no.holds) + " oracle " + std::to_string(oracle_no);
  detail = "a=5 anisotropic, a=4 isotropic";
  return std::nullopt;
}

RationalFunction random_unit(std::mt19937& rng) {
  std::uniform_int_distribution<long> coef(-12, 12), deg(0, 3);
  auto poly = [&] {
    std::vector<BigRational> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : v) x = coef(rng);
    while (v[0] == 0) v[0] = coef(rng);
    return Polynomial::from_coefficients(v);
  };
  return RationalFunction(poly(), poly());
}

Outcome anisotropic_gate_form(std::string& detail) {
  std::mt19937 rng(303);
  const HParams h = HParams::standard();
  int counts[4] = {0, 0, 0, 0};
  for (int i = 0; i < 20; ++i) {
    const RationalFunction g = random_unit(rng);
    const AnisotropyVerdict v = lemma_anisotropic_decide(g, h);
    if (v == AnisotropyVerdict::neither) return "g = " + g.to_string("t");
    ++counts[static_cast<int>(v)];
  }
  detail = "q1 " + std::to_string(counts[0]) + ", q2 " + std::to_string(counts[1]) + ", both " + std::to_string(counts[2]);
  return std::nullopt;
}

Outcome gate_semantics(std::string& detail) {
  const MultiplesTable table(TwistedCurve::standard(40));
  const HParams h = HParams::standard();
  const auto cands = default_candidates();
  std::string found;
  for (auto [n, m, r] : std::vector<std::tuple<long, long, long>>{{2, 3, 6}, {2, 2, 4}, {3, 4, 12}}) {
    const UVPair p = uv(table, n, m, r);
    auto w = replacement_search(p.u.reciprocal_substitution(), h, cands, 50);
    if (!w) w = replacement_search(p.v.reciprocal_substitution(), h, cands, 50);
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(r) + ")";
    if (!w) return tag + ": no candidate found";
    found += (found.empty() ? "" : ", ") + tag + " c=(" + str(w->first) + "," + str(w->second) + ")";
  }
  for (auto [n, m, r] : std::vector<std::tuple<long, long, long>>{{2, 2, 5}, {2, 3, 7}, {3, 3, 10}}) {
    const UVPair p = uv(table, n, m, r);
    for (const RationalFunction& g : {p.u.reciprocal_substitution(), p.v.reciprocal_substitution()})
      for (const auto& [c3, c5] : cands) {
        if (height(c3) > 50 || height(c5) > 50) continue;
        const RationalFunction f = build_f(g, c3, c5);
        if (!f.is_zero() && phi_gate(f, h).phi)
          return "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(r) + ") accepts c=(" +
                 str(c3) + "," + str(c5) + ")";
      }
  }
  detail = found + "; " + std::to_string(cands.size()) + " candidates rejected for each false triple";
  return std::nullopt;
}

const std::vector<const char*>& compiler_systems() {
  static const std::vector<const char*> systems = {
      R"({"vars":["x"],"eqs":[[[{"x":1},1],[{},-2]]]})",
      R"({"vars":["x","y"],"eqs":[[[{"x":1,"y":1},1],[{},-6]],[[{"x":1},1],[{},-2]]]})",
      R"({"vars":["x","y"],"eqs":[[[{"x":2},1],[{"y":2},1],[{},-5]]]})",
      R"({"vars":["x","y"],"eqs":[[[{"x":1},1],[{"y":1},1],[{},-3]],[[{"x":1},1],[{"y":1},-1],[{},-1]]]})",
      R"({"vars":["x","y","z"],"eqs":[[[{"x":1,"y":1,"z":1},1],[{},-6]],[[{"x":1},1],[{},-1]],[[{"y":1},1],[{},-2]]]})",
      R"({"vars":["x"],"eqs":[[[{"x":1},3],[{},-6]]]})",
      R"({"vars":["x"],"eqs":[[[{"x":2},1],[{},-4]]]})",
      R"({"vars":["x","y"],"eqs":[[[{"x":1,"y":1},1]],[[{"x":1},1],[{"y":1},1],[{},-2]]]})",
      R"({"vars":["x","y"],"eqs":[[[{"x":2},1],[{"y":1},-1]],[[{"y":1},1],[{},-9]]]})",
      R"({"vars":["x","y","z"],"eqs":[[[{"x":1},2],[{"y":1},5],[{"z":1},-10]],[[{"z":1},1],[{},-1]],[[{"x":1},1],[{},-5]]]})",
  };
  return systems;
}

std::string point_text(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

Outcome compiler_soundness(std::string& detail) {
  long solutions = 0, refuted = 0;
  for (const char* text : compiler_systems()) {
    const IntPolySystem sys = parse_system(json::Json::parse(text));
    const Compilation plain = compile(sys);
    CompileOptions opt;
    opt.fold = true;
    const Compilation folded = compile(sys, opt);
    if (folded.report.equation_count != 1) return std::string("fold emitted more than one equation for ") + text;
    if (plain.report.equation_count != equation_count(plain.formula().body))
      return std::string("report count mismatch for ") + text;
    const auto sols = brute_force_solutions(sys, 20);
    if (sols.empty()) return std::string("no solutions in the box for ") + text;
    for (const auto& s : sols) {
      const WitnessCheck a = check_witness(plain, build_witness(plain, s));
      const WitnessCheck b = check_witness(folded, build_witness(folded, s));
      if (a.formula != Truth::holds) return std::string(text) + " at " + point_text(s) + ": formula " + to_string(a.formula);
      if (b.folded != ZeroStatus::zero) return std::string(text) + " at " + point_text(s) + ": folded equation not zero";
      ++solutions;
    }
    // The origin and the first box corner are checked as non-solutions when they are.
    for (const std::vector<BigInt>& probe :
         {std::vector<BigInt>(sys.variables.size(), BigInt(0)), std::vector<BigInt>(sys.variables.size(), BigInt(3))}) {
      if (sys.satisfied(probe)) continue;
      if (check_witness(plain, build_witness(plain, probe)).formula != Truth::fails)
        return std::string(text) + " accepts non-solution " + point_text(probe);
      ++refuted;
    }
  }
  detail = std::to_string(compiler_systems().size()) + " systems, " + std::to_string(solutions) + " solutions, " +
           std::to_string(refuted) + " non-solutions rejected";
  return std::nullopt;
}

Outcome combine_soundness(std::string& detail) {
  std::mt19937 rng(404);
  std::uniform_int_distribution<long> coef(-6, 6), coin(0, 1);
  VarTable vars;
  const MPoly T = MPoly::var(vars.add("T", VarSort::parameter));
  const MPoly x = MPoly::var(vars.add("x")), y = MPoly::var(vars.add("y"));
  auto rpoly = [&] {
    return MPoly(coef(rng)) * x * y + MPoly(coef(rng)) * y * y + MPoly(coef(rng)) * T * x + MPoly(coef(rng));
  };
  const MPoly z1 = y - x * x, z2 = x - T;  // both vanish at (T, T^2)
  const Polynomial h = default_combiner();
  int zero = 0;
  for (int i = 0; i < 100; ++i) {
    const MPoly f1 = rpoly() * z1 + rpoly() * z2 + (coin(rng) ? rpoly() : MPoly());
    const MPoly f2 = rpoly() * z1 + rpoly() * z2 + (coin(rng) ? rpoly() : MPoly());
    Assignment at = base_assignment(vars);
    if (i % 2) {
      at[1] = RationalFunction::T();
      at[2] = RationalFunction::T().pow(2);
    } else {
      at[1] = RationalFunction(Polynomial::from_coefficients({coef(rng), coef(rng), 1}));
      at[2] = RationalFunction(Polynomial::from_coefficients({coef(rng), 1}), Polynomial::from_coefficients({1, 1}));
    }
    const bool both = evaluate(f1, at)->is_zero() && evaluate(f2, at)->is_zero();
    const bool g = evaluate(combine_conj(f1, f2, h), at)->is_zero();
    if (g != both) return "instance " + std::to_string(i) + ": f1 = " + f1.to_string(vars) + ", f2 = " + f2.to_string(vars);
    zero += both;
  }
  detail = "100 instances, " + std::to_string(zero) + " common zeros";
  return std::nullopt;
}

Outcome density_coverage(std::string& detail) {
  for (auto [p, pinned] : {std::pair{3L, kFullCoverageCount3}, std::pair{5L, kFullCoverageCount5}}) {
    BigRational last = -1;
    long first_full = -1;
    for (long n = 2; n <= 30; ++n) {
      const BigRational f = dense_coverage(u0_sample(n), p, 1).fraction;
      if (f < last) return "p=" + std::to_string(p) + ": coverage drops at count " + std::to_string(n);
      if (f == 1 && first_full < 0) first_full = n;
      last = f;
    }
    if (first_full < 0 || first_full > 500) return "p=" + std::to_string(p) + ": coverage never reaches 1";
    if (first_full != pinned)
      return "p=" + std::to_string(p) + ": full coverage first at " + std::to_string(first_full) + ", pinned " +
             std::to_string(pinned);
  }
  detail = "N = " + std::to_string(kFullCoverageCount3) + " (p=3), " + std::to_string(kFullCoverageCount5) + " (p=5)";
  return std::nullopt;
}

} // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all = {
      {1, "psi_m takes the value m at infinity", psi_at_infinity},
      {2, "orders of u, v at T and at infinity", orders_pattern},
      {3, "reduction mod T is a homomorphism", reduction_homomorphism},
      {4, "Hilbert symbol laws and quaternion products", hilbert_laws},
      {5, "local isotropy agrees with exhaustive search", isotropy_agreement},
      {6, "quaternion splitting by norm form and by symbol", quaternion_split},
      {7, "anisotropic <1,a><1,pi> instance", hypothesis_instance},
      {8, "one gate form is always anisotropic", anisotropic_gate_form},
      {9, "multiplication gate semantics", gate_semantics},
      {10, "compiled formulas hold at witnesses", compiler_soundness},
      {11, "combining two equations into one", combine_soundness},
      {12, "U0 sample coverage mod p", density_coverage},
  };
  return all;
}

SuiteReport run_suite(const std::vector<int>& only) {
  SuiteReport rep;
  for (const auto& c : acceptance_criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.counterexample = c.run(r.detail);
    } catch (const std::exception& e) {
      r.counterexample = std::string("exception: ") + e.what();
    }
    r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.pass = !r.counterexample.has_value();
    rep.results.push_back(std::move(r));
  }
  return rep;
}

json::Json encode(const SuiteReport& r, bool with_timings) {
  json::Json items = json::Json::array();
  for (const auto& c : r.results) {
    json::Json j{{"id", c.id}, {"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}};
    if (with_timings) j["elapsed_seconds"] = c.elapsed;
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    items.push_back(j);
  }
  return json::Json{{"all_pass", r.all_pass()}, {"criteria", items}};
}

} // namespace h10
