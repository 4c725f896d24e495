#pragma once

#include "nestsum/exact/numbers.hpp"

namespace nestsum {

// Counts of nested harmonic sum indices at fixed weight w, and of the basic
// sums that remain once successive relation families are used to rewrite the
// rest. All values are exact integers.

// Every index of weight w: 2 * 3^(w-1). Requires w >= 1.
Int count_all(int w);

// Remaining after algebraic (quasi-shuffle) relations: the number of weight-w
// Lyndon words over the signed alphabet, by the Witt formula
//   (1/w) sum_{d | w} mu(w/d) (3^d - 1).
// Requires w >= 1.
Int count_A(int w);

// Remaining after adding relations from differentiation with respect to the
// upper summation limit: 4 * 3^(w-2). Requires w >= 2.
Int count_D(int w);

// Remaining after adding argument-halving relations: 2 * 3^(w-1) - 2^(w-1).
// Requires w >= 1.
Int count_H(int w);

// Remaining after combining all three families:
//   T(w) - T(w-1)  with  T(m) = (1/m) sum_{d | m} mu(m/d) (3^d - 2^d).
// Requires w >= 2.
Int count_ADH(int w);

}  // namespace nestsum
