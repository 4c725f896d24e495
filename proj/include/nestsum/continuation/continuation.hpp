#pragma once

#include <vector>

#include "nestsum/exact/complex.hpp"
#include "nestsum/exact/numbers.hpp"

namespace nestsum {

// Continuation branch for alternating sums: the continued (-1)^N factor is
// +1 when interpolating through the even integers, -1 through the odd ones.
enum class Parity { even, odd };

// Truncated large-N expansion of the single sum S_a(N):
//   a = 1:   ln N + gamma_E + sum_n coeffs[n-1] N^-n
//   a >= 2:  zeta_a         + sum_n coeffs[n-1] N^-n
//   a < 0:   -eta(|a|) + sigma sum_n coeffs[n-1] N^-n  (sigma per Parity)
// All coefficients are exact rationals (Bernoulli / eta-tail data).
struct AsymptoticSeries {
  int a = 1;
  int order = 15;               // number of 1/N coefficients kept
  long n0 = 20;                 // expansion is accurate for Re(N) >= n0
  std::vector<Rational> coeffs; // coeffs[n-1] multiplies N^-n

  bool has_log() const { return a == 1; }
  // gamma_E, zeta_a or -eta(|a|), i.e. the N-independent term.
  BigFloat constant_term(unsigned digits = kDefaultDigits) const;
  BigFloat eval(const BigFloat& N, Parity parity = Parity::even) const;
  Complex eval(const Complex& N, Parity parity = Parity::even) const;
};

// Exact expansion coefficients; nonzero |a| <= 5, 1 <= order <= 20.
AsymptoticSeries asymptotic_coeffs(int a, int order);

// S_a(N) continued to complex N: shift N upward by integers into the
// asymptotic regime, expand there, unwind the shifts exactly. Poles sit at
// the negative integers; arguments within 1e-8 of one are rejected with
// std::domain_error. The parity flag selects the branch for a < 0 and is
// ignored for a > 0.
Complex continue_single(int a, const Complex& N, Parity parity = Parity::even);

}  // namespace nestsum
