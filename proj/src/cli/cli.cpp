#include "h10/cli/cli.hpp"

#include "h10/compiler/compile.hpp"
#include "h10/verify/suite.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace h10::cli {

namespace {

using json::Json;

// What a subcommand produced: JSON for --json, lines of text otherwise.
struct Output {
  Json json;
  std::string text;
  int code = kOk;
  bool json_only = false;  // the JSON is the product (compile to stdout)
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

Json point_json(const CurvePoint& P) {
  if (P.infinity) return "O";
  return Json{{"X", json::encode(P.X)}, {"Y", json::encode(P.Y)}};
}

Output cmd_psi(long m) {
  const TwistedCurve curve = TwistedCurve::standard(static_cast<int>(std::max(16L, std::labs(m))));
  const RationalFunction f = psi(curve, m);
  const BigRational c = constant_term_infinity(f);
  Output o;
  o.json = Json{{"m", m}, {"psi", json::encode(f)}, {"point", point_json(scalar_mul(curve, m))},
                {"constant_term_infinity", json::encode(c)}};
  o.text = "psi_" + std::to_string(m) + " = " + f.to_string() + "\nvalue at infinity: " + to_string(c) + "\n";
  return o;
}

Output cmd_orders(long n, long m, long r) {
  const OrdersReport rep = check_orders(TwistedCurve::standard(static_cast<int>(std::max({16L, std::labs(n * m), std::labs(r)}))), n, m, r);
  Output o;
  o.json = Json{{"n", n},
                {"m", m},
                {"r", r},
                {"ord_T", {{"u", rep.ordT_u}, {"v", rep.ordT_v}}},
                {"ord_inf", {{"u", rep.ordInf_u}, {"v", rep.ordInf_v}}},
                {"product_holds", rep.product_holds},
                {"pattern_holds", rep.pattern_holds}};
  std::ostringstream s;
  s << "ord_T(u) = " << rep.ordT_u << ", ord_T(v) = " << rep.ordT_v << "\n"
    << "ord_inf(u) = " << rep.ordInf_u << ", ord_inf(v) = " << rep.ordInf_v << "\n"
    << "n*m = r: " << yes_no(rep.product_holds) << "\npattern holds: " << yes_no(rep.pattern_holds) << "\n";
  o.text = s.str();
  o.code = rep.pattern_holds ? kOk : kFalse;
  return o;
}

Output cmd_denef(long max) {
  if (max < 1) throw std::invalid_argument("--max must be positive");
  const MultiplesTable table(TwistedCurve::standard(static_cast<int>(std::max(16L, max))));
  Output o;
  Json rows = Json::array();
  bool all = true;
  for (long m = -max; m <= max; ++m) {
    if (m == 0) continue;
    const BigRational c = constant_term_infinity(table.psi(m));
    all &= c == m;
    rows.push_back(Json{{"m", m}, {"constant_term_infinity", json::encode(c)}, {"equals_m", c == m}});
    o.text += std::to_string(m) + "\t" + to_string(c) + "\n";
  }
  o.json = Json{{"max", max}, {"values", rows}, {"all_equal", all}};
  o.code = all ? kOk : kFalse;
  return o;
}

Output cmd_hilbert(const std::string& a, const std::string& b, long p) {
  const int s = hilbert_symbol(parse_rational(a), parse_rational(b), PadicContext::make(p));
  Output o;
  o.json = Json{{"a", a}, {"b", b}, {"p", p}, {"symbol", s}};
  o.text = std::to_string(s) + "\n";
  o.code = s == 1 ? kOk : kFalse;
  return o;
}

Output cmd_isotropy(const std::string& form, long p) {
  const RationalForm q = parse_form(form);
  const bool iso = is_isotropic_local(q, PadicContext::make(p));
  Output o;
  Json entries = Json::array();
  for (const auto& e : q.entries()) entries.push_back(json::encode(e));
  o.json = Json{{"form", entries}, {"p", p}, {"isotropic", iso}};
  o.text = to_string(q) + " over Q_" + std::to_string(p) + ": " + (iso ? "isotropic" : "anisotropic") + "\n";
  o.code = iso ? kOk : kFalse;
  return o;
}

HParams params(long p, const std::string& a, const std::string& pi) {
  return HParams{PadicContext::make(p), parse_rational(a), parse_rational(pi)};
}

Output cmd_hypothesis(long p, const std::string& a, const std::string& pi) {
  const HypothesisReport r = hypothesis_h_check(params(p, a, pi));
  Output o;
  o.json = Json{{"p", p},
                {"a", a},
                {"pi", pi},
                {"holds", r.holds},
                {"anisotropic", r.anisotropic},
                {"pi_valuation", r.pi_valuation},
                {"a_is_unit", r.a_is_unit},
                {"a_residue_order", r.a_residue_order},
                {"root_exponent", r.root_exponent},
                {"p_is_1_mod_4", r.p_is_1_mod_4}};
  std::ostringstream s;
  s << "holds: " << yes_no(r.holds) << "\n<1,a,pi,a*pi> anisotropic: " << yes_no(r.anisotropic)
    << "\nord_p(pi) = " << r.pi_valuation << "\na mod p has order " << r.a_residue_order
    << "\np = 1 mod 4: " << yes_no(r.p_is_1_mod_4) << "\n";
  o.text = s.str();
  o.code = r.holds ? kOk : kFalse;
  return o;
}

Output cmd_gate(long n, long m, long r, long p, const std::string& a, const std::string& pi, long height) {
  const HParams h = params(p, a, pi);
  const long bound = std::max({16L, std::labs(n), std::labs(m), std::labs(r)});
  const MultiplesTable table(TwistedCurve::standard(static_cast<int>(bound)));
  const IndexGateReport rep = gate_for_indices(table, n, m, r, h, default_candidates(height), height);
  Output o;
  o.json = Json{{"q1", rep.result.q1_isotropic}, {"q2", rep.result.q2_isotropic}, {"phi", rep.result.phi}};
  o.json["c3"] = rep.witness ? json::encode(rep.witness->first) : Json(nullptr);
  o.json["c5"] = rep.witness ? json::encode(rep.witness->second) : Json(nullptr);
  o.json["source"] = rep.source ? Json(std::string(1, rep.source)) : Json(nullptr);
  std::ostringstream s;
  s << "q1 isotropic: " << yes_no(rep.result.q1_isotropic) << "\nq2 isotropic: " << yes_no(rep.result.q2_isotropic)
    << "\nphi: " << yes_no(rep.result.phi) << "\n";
  if (rep.witness)
    s << "witness from " << rep.source << ": c3 = " << to_string(rep.witness->first)
      << ", c5 = " << to_string(rep.witness->second) << "\n";
  o.text = s.str();
  o.code = rep.result.phi ? kOk : kFalse;
  return o;
}

Output cmd_u0(long count) {
  if (count < 1) throw std::invalid_argument("--count must be positive");
  const SampleSet s = u0_sample(count);
  Output o;
  Json values = Json::array();
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    values.push_back(Json{{"value", json::encode(s.values[i])},
                          {"j", s.witnesses[i].first},
                          {"k", s.witnesses[i].second}});
    o.text += to_string(s.values[i]) + "\t(" + std::to_string(s.witnesses[i].first) + ", " +
              std::to_string(s.witnesses[i].second) + ")\n";
  }
  o.json = Json{{"count", count}, {"source", s.source}, {"values", values}};
  return o;
}

Output cmd_dense(long p, int prec, long count) {
  if (count < 1) throw std::invalid_argument("--count must be positive");
  if (prec < 1) throw std::invalid_argument("--prec must be positive");
  const CoverageReport r = dense_coverage(u0_sample(count), PadicContext::make(p).p, prec);
  Output o;
  o.json = Json{{"p", p},
                {"prec", prec},
                {"count", count},
                {"classes_hit", r.classes_hit},
                {"classes_total", r.classes_total},
                {"p_integral_samples", r.p_integral},
                {"fraction", json::encode(r.fraction)}};
  o.text = std::to_string(r.classes_hit) + " of " + std::to_string(r.classes_total) + " classes mod " +
           std::to_string(p) + "^" + std::to_string(prec) + " (" + to_string(r.fraction) + ")\n";
  return o;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

Output cmd_compile(const std::string& input, bool fold, bool eliminate, const std::string& out_path) {
  CompileOptions opt;
  opt.fold = fold;
  opt.eliminate_constants = eliminate;
  const Compilation c = compile(parse_system(read_json_file(input)), opt);
  Output o;
  const Json full = encode(c);
  const CompilationReport& r = c.report;
  std::ostringstream s;
  s << "variables: " << r.variable_count << "\nequations: " << r.equation_count
    << "\nunfolded equations: " << r.unfolded_equation_count << "\nmax degree: " << r.max_degree
    << "\ncoefficients: " << r.coefficient_ring_description << "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot write " + out_path);
    f << full.dump(2) << "\n";
    o.json = full["report"];
    s << "written to " << out_path << "\n";
  } else {
    o.json = full;
    o.json_only = true;
  }
  o.text = s.str();
  return o;
}

Output cmd_verify(const std::vector<int>& only, bool timings) {
  const SuiteReport rep = run_suite(only);
  Output o;
  o.json = encode(rep, timings);
  std::ostringstream s;
  for (const auto& r : rep.results) {
    s << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name;
    if (timings) s << "  (" << r.elapsed << " s)";
    s << "\n      " << (r.pass ? r.detail : *r.counterexample) << "\n";
  }
  s << (rep.all_pass() ? "all criteria pass" : "some criteria fail") << "\n";
  o.text = s.str();
  o.code = rep.all_pass() ? kOk : kFalse;
  return o;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curve, quadratic-form and reduction tools over Q(T)", "h10"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.fallthrough();

  std::function<Output()> action;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  long m = 0, n = 0, r = 0, max = 12, p = 13, height = 50, count = 12;
  int prec = 1;
  std::string a = "5", b, pi = "13", form, input, out_path;
  bool fold = false, eliminate = false, suite = false, timings = false;
  std::vector<int> only;

  auto* psi_cmd = sub("psi", "psi_m = X_m / (T Y_m) and its value at infinity");
  psi_cmd->add_option("--m", m, "Multiple (nonzero)")->required();
  psi_cmd->callback([&] { action = [&] { return cmd_psi(m); }; });

  auto* orders_cmd = sub("orders", "Orders of u, v at T and at infinity");
  orders_cmd->add_option("--n", n)->required();
  orders_cmd->add_option("--m", m)->required();
  orders_cmd->add_option("--r", r)->required();
  orders_cmd->callback([&] { action = [&] { return cmd_orders(n, m, r); }; });

  auto* denef_cmd = sub("denef", "Values of psi_m at infinity for 1 <= |m| <= max");
  denef_cmd->add_option("--max", max, "Largest |m|")->capture_default_str();
  denef_cmd->callback([&] { action = [&] { return cmd_denef(max); }; });

  auto* hilbert_cmd = sub("hilbert", "Hilbert symbol (a, b)_p");
  hilbert_cmd->add_option("--a", a)->required();
  hilbert_cmd->add_option("--b", b)->required();
  hilbert_cmd->add_option("--p", p)->required();
  hilbert_cmd->callback([&] { action = [&] { return cmd_hilbert(a, b, p); }; });

  auto* iso_cmd = sub("isotropy", "Isotropy of a diagonal form over Q_p");
  iso_cmd->add_option("--form", form, "Comma-separated rational entries")->required();
  iso_cmd->add_option("--p", p)->required();
  iso_cmd->callback([&] { action = [&] { return cmd_isotropy(form, p); }; });

  auto* hyp_cmd = sub("hypothesis-h", "Whether <1,a> (x) <1,pi> is anisotropic over Q_p with ord_p(pi) odd");
  hyp_cmd->add_option("--p", p)->capture_default_str();
  hyp_cmd->add_option("--a", a)->capture_default_str();
  hyp_cmd->add_option("--pi", pi)->capture_default_str();
  hyp_cmd->callback([&] { action = [&] { return cmd_hypothesis(p, a, pi); }; });

  auto* gate_cmd = sub("gate", "Multiplication gate for an index triple, with a (c3, c5) witness search");
  gate_cmd->add_option("--n", n)->required();
  gate_cmd->add_option("--m", m)->required();
  gate_cmd->add_option("--r", r)->required();
  gate_cmd->add_option("--p", p)->capture_default_str();
  gate_cmd->add_option("--a", a)->capture_default_str();
  gate_cmd->add_option("--pi", pi)->capture_default_str();
  gate_cmd->add_option("--height", height, "Candidate height bound")->capture_default_str();
  gate_cmd->callback([&] { action = [&] { return cmd_gate(n, m, r, p, a, pi, height); }; });

  auto* u0_cmd = sub("u0", "Sample of U0 from the first multiples of (0,1)");
  u0_cmd->add_option("--count", count)->capture_default_str();
  u0_cmd->callback([&] { action = [&] { return cmd_u0(count); }; });

  auto* dense_cmd = sub("dense", "Residue classes mod p^prec hit by the U0 sample");
  dense_cmd->add_option("--p", p)->required();
  dense_cmd->add_option("--prec", prec)->capture_default_str();
  dense_cmd->add_option("--count", count)->capture_default_str();
  dense_cmd->callback([&] { action = [&] { return cmd_dense(p, prec, count); }; });

  auto* compile_cmd = sub("compile", "Existential formula over Q(T) for an integer polynomial system");
  compile_cmd->add_option("--input", input, "System JSON")->required();
  compile_cmd->add_flag("--fold", fold, "Emit a single equation");
  compile_cmd->add_flag("--eliminate-constants", eliminate, "Replace a and pi by roots of their minimal polynomials");
  compile_cmd->add_option("--out", out_path, "Output file (stdout when omitted)");
  compile_cmd->callback([&] { action = [&] { return cmd_compile(input, fold, eliminate, out_path); }; });

  auto* verify_cmd = sub("verify", "Acceptance checks");
  verify_cmd->add_flag("--suite", suite, "Run every criterion")->required();
  verify_cmd->add_option("--only", only, "Criterion ids to run");
  verify_cmd->add_flag("--timings", timings, "Include elapsed times");
  verify_cmd->callback([&] { action = [&] { return cmd_verify(only, timings); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const Output o = action();
    if (as_json || o.json_only) out << o.json.dump(2) << "\n";
    else out << o.text;
    return o.code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFalse;
  }
}

} // namespace h10::cli
