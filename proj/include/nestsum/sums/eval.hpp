#pragma once

#include "nestsum/algebra/words.hpp"
#include "nestsum/exact/numbers.hpp"

namespace nestsum {

// Exact value of the nested harmonic sum S_idx(N),
//   S_{b,rest}(N) = sum_{k=1..N} sign(b)^k / k^|b| * S_rest(k),  S_{}(N) = 1.
// Computing at N fills a shared prefix cache for all 1..N, so repeated and
// nested evaluations stay linear. Thread-safe.
Rational eval_harmonic(const HarmonicIndex& idx, long N);

// Exact value of the generalized sum
//   S_{(m,x),rest}(N) = sum_{k=1..N} x^k / k^m * S_rest(k).
// Coincides with eval_harmonic when every weight is +-1.
Rational eval_ssum(const GeneralIndex& idx, long N);

// Exact value of the nested cyclotomic sum (outer summation from k = 1),
//   S_{(a,b,c;s),rest}(N) = sum_{k=1..N} s^k / (a k + b)^c * S_rest(k).
Rational eval_cyclotomic(const CyclotomicIndex& idx, long N);

// Exact value of the depth-1 cyclotomic sum in its k = 0 convention,
//   S_{l,m,n}(N) = sum_{k=0..N} sign(n)^k / (l k + m)^|n|,  l > m >= 1, n != 0.
// Distinct from the nested form above, which starts at k = 1.
Rational eval_cyclotomic_single(long l, long m, int n, long N);

// Exact check of the depth-1 duplication relation, with m = |a|:
//   S_m(2N) + S_{-m}(2N) = 2^(1-m) S_m(N).
bool duplication_check(int a, long N);

}  // namespace nestsum
