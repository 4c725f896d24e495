#pragma once

#include <functional>
#include <optional>

#include "nestsum/polylog/letters.hpp"

namespace nestsum {

// Integrand factor of a Mellin moment int_0^1 x^N f(x) dx:
//   f(x) = x^x_power * H_word(x) * (1/(1+x) if over_one_plus_x).
struct MellinIntegrand {
  int x_power = 0;
  std::optional<PolyLogWord> word;
  bool over_one_plus_x = false;
};

// Mellin moment for N >= 0. Endpoint behaviour (integrable ln-power
// singularities at 0 and 1) is handled by dyadic grading toward both ends
// with midpoint closures on the last slivers.
BigFloat mellin_moment(const MellinIntegrand& f, long N, const BigFloat& tol = BigFloat("1e-12"));

// Same quadrature for a caller-supplied factor f(x).
BigFloat mellin_moment(const std::function<BigFloat(const BigFloat&)>& f, long N,
                       const BigFloat& tol = BigFloat("1e-10"));

// Checks the Mellin-space evaluation of S_{-2,1,1}(N) for 1 <= N <= 8: the
// exact rational sum against (-1)^N times the moments of H_{0,1,1}(x)/(1+x)
// and 1/(1+x), plus the constant block
//   -Li_4(1/2) - ln^4(2)/24 + ln^2(2) zeta_2 / 4 - 7 ln(2) zeta_3 / 8
//   + zeta_2^2 / 8.
bool verify_mellin_identity(long N, const BigFloat& tol = BigFloat("1e-8"));

}  // namespace nestsum
