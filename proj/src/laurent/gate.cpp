#include "h10/laurent/gate.hpp"

#include "h10/density/density.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace h10 {

RationalFunction build_f(const RationalFunction& g, const BigRational& c3, const BigRational& c5) {
  const RationalFunction t = RationalFunction::T();
  const RationalFunction one_plus_t = RationalFunction(1) + t;
  return one_plus_t.pow(3) * g + RationalFunction(c3) * t.pow(3) + RationalFunction(c5) * t.pow(5);
}

GateResult phi_gate(const RationalFunction& w, const HParams& h) {
  if (w.is_zero()) throw std::invalid_argument("gate argument must be nonzero");
  const auto [q1, q2] = gate_forms(w, h);
  GateResult r;
  r.q1_isotropic = is_isotropic_laurent(q1);
  r.q2_isotropic = is_isotropic_laurent(q2);
  r.phi = r.q1_isotropic && r.q2_isotropic;
  return r;
}

namespace {

BigInt pair_height(const CandidatePair& c) { return std::max(height(c.first), height(c.second)); }

bool candidate_less(const CandidatePair& x, const CandidatePair& y) {
  const BigInt hx = pair_height(x), hy = pair_height(y);
  if (hx != hy) return hx < hy;
  if (x.first != y.first) return x.first < y.first;
  return x.second < y.second;
}

} // namespace

std::vector<CandidatePair> default_candidates(long height_bound, long sample_count, long fallback_height) {
  std::set<BigRational> values;
  for (const auto& v : u0_sample(sample_count).values)
    if (height(v) <= height_bound) values.insert(v);
  std::vector<CandidatePair> primary;
  for (const auto& a : values)
    for (const auto& b : values) primary.emplace_back(a, b);
  std::sort(primary.begin(), primary.end(), candidate_less);

  std::set<BigRational> small;
  for (long n = -fallback_height; n <= fallback_height; ++n)
    for (long d = 1; d <= fallback_height; ++d) {
      BigRational q(n, d);
      q.canonicalize();
      small.insert(q);
    }
  std::vector<CandidatePair> fallback;
  const std::set<CandidatePair> seen(primary.begin(), primary.end());
  for (const auto& a : small)
    for (const auto& b : small)
      if (!seen.count({a, b})) fallback.emplace_back(a, b);
  std::sort(fallback.begin(), fallback.end(), candidate_less);

  primary.insert(primary.end(), fallback.begin(), fallback.end());
  return primary;
}

std::optional<CandidatePair> replacement_search(const RationalFunction& g, const HParams& h,
                                                const std::vector<CandidatePair>& candidates,
                                                long height_bound) {
  if (candidates.empty()) throw std::invalid_argument("empty candidate list");
  for (const auto& c : candidates) {
    if (pair_height(c) > height_bound) continue;
    const RationalFunction f = build_f(g, c.first, c.second);
    if (f.is_zero()) continue;
    if (phi_gate(f, h).phi) return c;
  }
  return std::nullopt;
}

IndexGateReport gate_for_indices(const MultiplesTable& table, long n, long m, long r, const HParams& h,
                                 const std::vector<CandidatePair>& candidates, long height_bound) {
  const UVPair p = uv(table, n, m, r);
  const RationalFunction gu = p.u.reciprocal_substitution(), gv = p.v.reciprocal_substitution();
  IndexGateReport rep;
  for (const auto& [g, tag] : {std::pair{gu, 'u'}, std::pair{gv, 'v'}}) {
    if (auto c = replacement_search(g, h, candidates, height_bound)) {
      rep.witness = c;
      rep.source = tag;
      rep.result = phi_gate(build_f(g, c->first, c->second), h);
      return rep;
    }
  }
  for (const auto& c : candidates)
    if (pair_height(c) <= height_bound) {
      rep.result = phi_gate(build_f(gu, c.first, c.second), h);
      break;
    }
  return rep;
}

} // namespace h10
