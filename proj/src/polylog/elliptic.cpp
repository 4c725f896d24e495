#include "nestsum/polylog/elliptic.hpp"

#include <stdexcept>

#include "nestsum/polylog/engine.hpp"
#include "nestsum/polylog/hpl.hpp"

namespace nestsum {

// Split at the midpoint m = (x+1)/2 and substitute v = sqrt(y-x) on the
// left, u = sqrt(1-y) on the right. The integrand 1/(sqrt(y) sqrt(1-y)
// sqrt(y-x)) dy turns into 2 dv / sqrt(y (1-y)) and 2 du / sqrt(y (y-x)),
// each analytic on its closed range.
BigFloat eval_T(const BigFloat& x, const BigFloat& tol) {
  if (!(x > 0) || !(x < 1)) throw std::domain_error("eval_T needs 0 < x < 1");
  ScopedPrecision sp(detail::work_digits(tol));
  const BigFloat tau = detail::tail_target(tol);
  const BigFloat m = (x + 1) / 2;
  const BigFloat vmax = sqrt(m - x);
  const BigFloat umax = sqrt(1 - m);
  quad::Fn left = [&x](const BigFloat& v) {
    BigFloat y = x + v * v;
    return 2 / sqrt(y * (1 - y));
  };
  quad::Fn right = [&x](const BigFloat& u) {
    BigFloat y = 1 - u * u;
    return 2 / sqrt(y * (y - x));
  };
  return quad::integrate(left, BigFloat(0), vmax, {}, tau) +
         quad::integrate(right, BigFloat(0), umax, {}, tau);
}

}  // namespace nestsum
