#pragma once

#include "h10/local/isotropy.hpp"

namespace h10 {

/// Constants a (a p-adic unit) and pi (odd valuation) over Q_p.
struct HParams {
  PadicContext ctx;
  BigRational a = 5;
  BigRational pi = 13;

  static HParams standard() { return HParams{PadicContext::make(13), 5, 13}; }
  /// <1, a> (x) <1, pi>.
  RationalForm form() const;
};

struct HypothesisReport {
  bool holds = false;           // <1,a,pi,a pi> anisotropic and ord_p(pi) odd
  bool anisotropic = false;
  int pi_valuation = 0;
  // Side conditions, reported only.
  bool a_is_unit = false;
  long a_residue_order = 0;     // multiplicative order of a mod p
  int root_exponent = -1;       // r with order = 2^r, or -1
  bool p_is_1_mod_4 = false;    // i lies in Q_p
};

/// Throws std::invalid_argument("π must have odd valuation") for even ord_p(pi).
HypothesisReport hypothesis_h_check(const HParams& params);

} // namespace h10
