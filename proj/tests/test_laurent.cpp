#include <doctest.h>

#include "h10/core/place.hpp"
#include "h10/laurent/gate.hpp"
#include "h10/verify/oracles.hpp"

#include <random>

using namespace h10;

namespace {

const HParams H = HParams::standard();
const RationalFunction t = RationalFunction::T();

RationalFunction c(long x) { return RationalFunction(x); }

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

} // namespace

TEST_CASE("springer_residues examples") {
  const ResiduePair a = springer_residues(LaurentForm({c(1), c(-1), t, c(5) * t}, H.ctx));
  CHECK(a.q_unit == RationalForm{1, -1});
  CHECK(a.q_twisted == RationalForm{1, 5});
  const ResiduePair b = springer_residues(LaurentForm({t.pow(3), c(5) * t.pow(2)}, H.ctx));
  CHECK(b.q_unit == RationalForm{5});
  CHECK(b.q_twisted == RationalForm{1});

  const RationalFunction g = (c(3) + t) / (c(1) - t * t);  // unit, g(0) = 3
  const auto [q1, q2] = gate_forms(g, H);
  const ResiduePair r = springer_residues(q1);
  CHECK(r.q_unit == tensor(RationalForm{-1, -3}, RationalForm{1, 13}));
  CHECK(r.q_twisted == tensor(RationalForm{1, -5}, RationalForm{1, 13}));
}

TEST_CASE("is_isotropic_laurent examples") {
  CHECK(is_isotropic_laurent(LaurentForm({c(1), c(-1), t}, H.ctx)));
  std::vector<RationalFunction> e;
  for (long x : {1, 5, 13, 65}) e.push_back(c(x));
  for (long x : {1, 5, 13, 65}) e.push_back(c(x) * t);
  CHECK_FALSE(is_isotropic_laurent(LaurentForm(e, H.ctx)));
  CHECK_FALSE(oracle::laurent_isotropic_by_search({1, 5, 13, 65}, {1, 5, 13, 65}, 13));
  // <1,5,13,65,t>: both residue forms anisotropic.
  CHECK_FALSE(is_isotropic_laurent(LaurentForm({c(1), c(5), c(13), c(65), t}, H.ctx)));
  CHECK_FALSE(oracle::laurent_isotropic_by_search({1, 5, 13, 65}, {1}, 13));
  // <1,-1,13,65,t>: hyperbolic unit residue.
  CHECK(is_isotropic_laurent(LaurentForm({c(1), c(-1), c(13), c(65), t}, H.ctx)));
  CHECK(oracle::laurent_isotropic_by_search({1, -1, 13, 65}, {1}, 13));
}

TEST_CASE("residue criterion agrees with truncated zero search on random forms") {
  std::mt19937 rng(17);
  int isotropic = 0, anisotropic = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const long p = trial % 2 == 0 ? 3 : 5;
    const long u = 2;  // nonresidue mod 3 and mod 5
    const std::vector<long> pool = {1, -1, u, -u, p, -p, u * p, -u * p};
    std::uniform_int_distribution<int> dim(2, 6), pick(0, 7), coin(0, 1);
    const int n = dim(rng);
    std::vector<std::int64_t> A, B;
    std::vector<RationalFunction> entries;
    for (int i = 0; i < n; ++i) {
      const long x = pool[static_cast<std::size_t>(pick(rng))];
      if (coin(rng)) {
        A.push_back(x);
        entries.push_back(c(x));
      } else {
        B.push_back(x);
        entries.push_back(c(x) * t);
      }
    }
    const bool iso = is_isotropic_laurent(LaurentForm(entries, PadicContext::make(p)));
    CHECK(iso == oracle::laurent_isotropic_by_search(A, B, p));
    (iso ? isotropic : anisotropic) += 1;
  }
  CHECK(isotropic > 0);
  CHECK(anisotropic > 0);
}

TEST_CASE("base form and the a ~ -a identity") {
  CHECK(base_form_anisotropic(H));
  CHECK_FALSE(base_form_anisotropic(HParams{H.ctx, 4, 13}));
}

TEST_CASE("lemma_anisotropic_decide") {
  CHECK(lemma_anisotropic_decide(c(1), H) == AnisotropyVerdict::q2_anisotropic);
  CHECK_THROWS_AS(lemma_anisotropic_decide(t, H), std::invalid_argument);
  CHECK_THROWS_AS(lemma_anisotropic_decide(t.inverse().pow(2), H), std::invalid_argument);
  CHECK_NE(lemma_anisotropic_decide(t * t * c(7), H), AnisotropyVerdict::neither);
  std::mt19937 rng(23);
  for (int i = 0; i < 20; ++i) CHECK_NE(lemma_anisotropic_decide(random_unit(rng), H), AnisotropyVerdict::neither);
}

TEST_CASE("build_f") {
  const RationalFunction g = (c(2) + t) / (c(1) + c(3) * t);
  CHECK(build_f(g, 0, 0) == (c(1) + t).pow(3) * g);
  CHECK(ord_at(build_f(t * g, 7, -2), Place::zero()) >= 1);
  for (long c3 : {-3, 0, 5})
    for (long c5 : {-1, 0, 2}) {
      CHECK(ord_at(build_f(g, c3, c5), Place::zero()) == 0);
      CHECK(ord_at(build_f(t * g, c3, c5), Place::zero()) == 1);
    }
}

TEST_CASE("phi_gate examples") {
  std::mt19937 rng(29);
  for (int i = 0; i < 10; ++i) CHECK_FALSE(phi_gate(random_unit(rng), H).phi);
  // w = t * unit: twisted residues <1,-a,-w0><1,pi> have dimension 6.
  const GateResult r = phi_gate(t * (c(1) + t), H);
  CHECK(r.phi);
  CHECK(r.q1_isotropic);
  CHECK(r.q2_isotropic);
}

TEST_CASE("default candidates") {
  const auto cands = default_candidates();
  REQUIRE(cands.size() >= 4);
  CHECK(cands[0] == CandidatePair(0, 0));
  CHECK(cands[1] == CandidatePair(0, 1));
  CHECK(cands[2] == CandidatePair(1, 0));
  CHECK(cands[3] == CandidatePair(1, 1));
  CHECK_THROWS_WITH(replacement_search(c(1), H, {}, 50), "empty candidate list");
}

TEST_CASE("gate and valuation coupling for n, m in [2..5]") {
  const MultiplesTable table(TwistedCurve::standard(40));
  const auto cands = default_candidates();
  for (long n = 2; n <= 5; ++n)
    for (long m = 2; m <= 5; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const IndexGateReport yes = gate_for_indices(table, n, m, n * m, H, cands);
      CHECK(yes.result.phi);
      CHECK(yes.witness.has_value());
      const IndexGateReport no = gate_for_indices(table, n, m, n * m + 1, H, cands);
      CHECK_FALSE(no.result.phi);
      CHECK_FALSE(no.witness.has_value());
    }
  const UVPair p = uv(table, 2, 3, 6);
  const auto found = replacement_search(p.u.reciprocal_substitution(), H, cands);
  const auto found_v = replacement_search(p.v.reciprocal_substitution(), H, cands);
  CHECK((found.has_value() || found_v.has_value()));
}
