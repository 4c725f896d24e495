#pragma once

#include <vector>

#include "nestsum/algebra/lincomb.hpp"
#include "nestsum/algebra/words.hpp"

namespace nestsum {

// Product of basic sums, kept sorted so it acts as a multiset.
using BasisMonomial = std::vector<HarmonicIndex>;

// Polynomial in basic sums with Rational coefficients. The empty monomial is
// the constant 1.
using BasisPolynomial = LinComb<BasisMonomial>;

// Multiply two basis polynomials (multiset union of monomials per term pair).
BasisPolynomial basis_mul(const BasisPolynomial& a, const BasisPolynomial& b);

// Rewrite S_idx as a polynomial in sums with Lyndon indices, using only
// quasi-shuffle identities: for non-Lyndon w with leading Lyndon factor l and
// remainder r, the product S_l S_r expands as q S_w plus terms that are
// strictly smaller in (weight, length, letter-lex), so solving for S_w and
// recursing terminates. Results are cached; the cache is safe to share
// between threads.
BasisPolynomial reduce_to_basis(const HarmonicIndex& idx, int max_weight = 5);

}  // namespace nestsum
