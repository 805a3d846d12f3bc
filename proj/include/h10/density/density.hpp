#pragma once

#include "h10/curve/rational_point.hpp"

#include <string>
#include <utility>
#include <vector>

namespace h10 {

/// 1*(0,1), ..., count*(0,1) on y^2 = x^3 + x + 1.
std::vector<RationalPoint> e0_multiples(long count);

struct SampleSet {
  std::vector<BigRational> values;
  /// For values[i], multiples (j, k) with values[i] = (x_j / y_j) (y_k / x_k).
  std::vector<std::pair<long, long>> witnesses;
  std::string source;
};

/// Distinct products (x/y)(y'/x') over ordered pairs of the first `count`
/// multiples with y x' != 0, in order of first occurrence (outer index, then inner).
SampleSet u0_sample(long count);

struct CoverageReport {
  long classes_hit = 0;
  long classes_total = 0;
  long p_integral = 0;
  BigRational fraction;
};

/// Residue classes mod p^prec hit by the p-integral samples.
CoverageReport dense_coverage(const SampleSet& samples, long p, int prec);

} // namespace h10
