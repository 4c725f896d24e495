#pragma once

#include <vector>

#include "nestsum/algebra/words.hpp"
#include "nestsum/exact/numbers.hpp"

namespace nestsum {

// One nesting level of a binomial-weighted sum. With running index i the
// level contributes the factor
//   prefactor * base^i * C(2i,i)^(0|+1|-1) / (denom_a*i + denom_b)^denom_power
// and sums the next level (or the innermost S-sum) up to i.
struct BinomialLevel {
  enum class Binom { none, numerator, denominator };
  Binom binom = Binom::none;
  Rational prefactor{1};
  Rational base{1};
  long denom_a = 0;  // a = b = 0 disables the denominator factor
  long denom_b = 0;
  int denom_power = 1;
};

// Nested binomial sum: levels outermost first, an S-sum innermost.
//   sum_{i1=1..N} F_1(i1) sum_{i2=1..i1} F_2(i2) ... S_inner(i_depth).
struct BinomialSumSpec {
  std::vector<BinomialLevel> levels;
  GeneralIndex inner;  // empty index means the constant 1

  // depth >= 1; bases nonzero; active denominators positive for every i >= 1.
  void validate() const;
};

// Exact value by nested direct summation with prefix reuse per level.
Rational eval_binomial_nested(const BinomialSumSpec& spec, long N);

}  // namespace nestsum
