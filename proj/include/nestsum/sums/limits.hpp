#pragma once

#include <string>
#include <vector>

#include "nestsum/algebra/words.hpp"
#include "nestsum/exact/numbers.hpp"

namespace nestsum {

// Outcome of an N -> infinity limit. Divergence is a typed outcome:
// a leading (exponent 1, weight 1) entry produces polynomial growth in
// sigma_0 (the divergent-harmonic-series symbol) of the reported degree;
// weight magnitudes above 1 are rejected as potentially exponentially
// divergent and carry no value.
struct LimitResult {
  enum class Kind { converged, diverges_sigma0, diverges_weight };
  Kind kind = Kind::converged;
  BigFloat value;                  // converged only
  int sigma0_power = 0;            // diverges_sigma0 only
  std::vector<BigFloat> iterates;  // acceleration trail; last entry equals value
  std::string note;

  bool converged() const { return kind == Kind::converged; }
};

// Numeric limit by high-precision partial summation with tail acceleration:
// outer weights |x| < 1 sum directly with a geometric tail bound; outer
// weights +-1 use binomially smoothed partial sums on a doubling grid of
// checkpoints, extrapolated by a Richardson ladder that repeats each power
// to absorb logarithmic corrections.
LimitResult limit_to_infinity(const GeneralIndex& idx, unsigned digits = kDefaultDigits);
LimitResult limit_to_infinity(const HarmonicIndex& idx, unsigned digits = kDefaultDigits);

}  // namespace nestsum
