#pragma once

#include "nestsum/exact/numbers.hpp"

namespace nestsum {

// T(x) = int_x^1 dy/y * 1/sqrt(1-y) * 1/sqrt(1 - x/y) for 0 < x < 1.
// Both endpoint square-root singularities are removed by substitution, so
// the quadrature only sees analytic integrands.
BigFloat eval_T(const BigFloat& x, const BigFloat& tol = BigFloat("1e-10"));

}  // namespace nestsum
