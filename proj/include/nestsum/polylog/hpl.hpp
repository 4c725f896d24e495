#pragma once

#include <vector>

#include "nestsum/polylog/letters.hpp"

namespace nestsum {

// H_w(x) over the harmonic alphabet {0, 1, -1}; weight <= 5, x in (0,1).
// Absolute accuracy tol. Trailing zeros are extracted as ln^k(x)/k! and
// leading 1-letters as powers of -ln(1-x), so the quadrature only ever sees
// words that are regular at both interval ends.
BigFloat hpl_eval(const PolyLogWord& w, const BigFloat& x, const BigFloat& tol = BigFloat("1e-12"));

// H_w(x) for words mixing rational root letters and cyclotomic letters;
// weight <= 4. A root letter with its pole b inside (0,1) restricts the
// argument to x < b; violations throw std::domain_error.
BigFloat hpl_eval_general(const PolyLogWord& w, const BigFloat& x,
                          const BigFloat& tol = BigFloat("1e-12"));

// H*_w(x), the same iteration taken over [x, 1]:
//   H*_{b,v}(x) = int_x^1 dy f_b(y) H*_v(y),  H*_empty = 1.
// This is the home of the sqrt-form letters; every kernel in w must be
// regular on [x, 1] (so the root letter 1 and the cyclotomic (1,0) are
// rejected here).
BigFloat hpl_eval_star(const PolyLogWord& w, const BigFloat& x,
                       const BigFloat& tol = BigFloat("1e-12"));

// Checks H_u(x) H_v(x) = sum of shuffle interleavings, combined weight <= 5.
bool verify_shuffle(const PolyLogWord& u, const PolyLogWord& v, const BigFloat& x,
                    const BigFloat& tol = BigFloat("1e-10"));

// Checks the x -> (1-x)/(1+x) transformation identity: H_{-1,0,1} at the
// transformed argument against its expansion in words at x together with
// zeta_2, zeta_3 and ln 2.
bool verify_arg_transform(const BigFloat& x, const BigFloat& tol = BigFloat("1e-10"));

namespace detail {

// coeff * ln(x)^log_pow * (-ln(1-x))^one_pow * H_core(x), where core has no
// trailing root-0 letters and no leading root-1 letters.
struct ExtractTerm {
  Rational coeff;
  int log_pow = 0;
  int one_pow = 0;
  PolyLogWord core;
};

// Shuffle-based endpoint extraction; exact, memoized, letter-agnostic.
std::vector<ExtractTerm> extract(const PolyLogWord& w);

// Panel-backed H_core(x) with a cached, lazily extended representation.
// tail_tol is the per-panel Chebyshev tail target.
BigFloat eval_core(const PolyLogWord& core, const BigFloat& x, const BigFloat& tail_tol);

// Extraction-aware evaluation without the per-operation weight caps; shared
// by the public evaluators and the Mellin quadrature.
BigFloat eval_word(const PolyLogWord& w, const BigFloat& x, const BigFloat& tail_tol);

// Working decimal digits and panel tail target derived from a tolerance.
unsigned work_digits(const BigFloat& tol);
BigFloat tail_target(const BigFloat& tol);

}  // namespace detail

}  // namespace nestsum
