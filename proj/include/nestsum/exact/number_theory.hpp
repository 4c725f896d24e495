#pragma once

#include "nestsum/exact/int_polynomial.hpp"
#include "nestsum/exact/numbers.hpp"

namespace nestsum {

// Moebius function; n >= 1.
int mobius(long n);

// Euler totient; n >= 1.
Int totient(long n);

// n-th cyclotomic polynomial, computed by exact division of x^n - 1 by the
// product of all lower Phi_d with d | n. Memoized; synchronized.
const IntPolynomial& cyclotomic_poly(long n);

// Binomial coefficient C(n, k); n >= 0. Rejects negative n; returns 0 for
// k outside [0, n].
Int binomial(long n, long k);

// Bernoulli number B_n (B_1 = -1/2 convention). Memoized; synchronized.
Rational bernoulli(long n);

}  // namespace nestsum
