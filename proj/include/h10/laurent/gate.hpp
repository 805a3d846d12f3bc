#pragma once

#include "h10/curve/curve.hpp"
#include "h10/laurent/laurent_form.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace h10 {

/// (1 + t)^3 g + c3 t^3 + c5 t^5.
RationalFunction build_f(const RationalFunction& g, const BigRational& c3, const BigRational& c5);

struct GateResult {
  bool q1_isotropic = false;
  bool q2_isotropic = false;
  bool phi = false;
};

/// Both gate forms of w tested over Q_p((t)).
GateResult phi_gate(const RationalFunction& w, const HParams& h);

using CandidatePair = std::pair<BigRational, BigRational>;

/// Candidate (c3, c5) pairs: values of u0_sample(sample_count) with height at
/// most height_bound, ordered by (max height, c3, c5), followed by the pairs
/// of rationals of height at most fallback_height not already listed.
std::vector<CandidatePair> default_candidates(long height_bound = 50, long sample_count = 12,
                                              long fallback_height = 3);

/// First candidate (of height <= height_bound) with phi_gate(build_f(g, c3, c5)) true.
/// Throws std::invalid_argument("empty candidate list").
std::optional<CandidatePair> replacement_search(const RationalFunction& g, const HParams& h,
                                                const std::vector<CandidatePair>& candidates,
                                                long height_bound = 50);

/// Gate outcome for an index triple (n, m, r): u and v are rewritten in
/// t = 1/T and searched in that order.
struct IndexGateReport {
  GateResult result;
  std::optional<CandidatePair> witness;
  char source = 0;  // 'u', 'v', or 0 when no candidate succeeded
};

IndexGateReport gate_for_indices(const MultiplesTable& table, long n, long m, long r, const HParams& h,
                                 const std::vector<CandidatePair>& candidates, long height_bound = 50);

} // namespace h10
