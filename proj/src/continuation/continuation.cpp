#include "nestsum/continuation/continuation.hpp"

#include <cstdlib>
#include <stdexcept>

#include "nestsum/exact/number_theory.hpp"
#include "nestsum/sums/constants.hpp"

namespace nestsum {
namespace {

// Shift until Re >= this before applying an expansion; with kTailTerms
// Bernoulli terms the truncation error is far below working precision.
constexpr long kShiftTarget = 30;
constexpr int kTailTerms = 20;

unsigned current_digits() { return static_cast<unsigned>(BigFloat::default_precision()); }

// eta at nonpositive integers (Abel values): eta(0) = 1/2 and
// eta(-n) = (2^{n+1} - 1) B+_{n+1} / (n+1) with B+_1 = +1/2.
Rational eta_nonpositive(int n) {
  if (n == 0) return Rational(1, 2);
  return (Rational(2).pow(n + 1) - Rational(1)) * bernoulli(n + 1) / Rational(n + 1);
}

void check_exponent(int a) {
  if (a == 0 || std::abs(a) > 5)
    throw std::domain_error("supported exponents are nonzero with |a| <= 5");
}

// Distance from N to the nearest negative integer (the pole set).
BigFloat pole_distance(const Complex& N) {
  using boost::multiprecision::floor;
  BigFloat r = floor(N.re + BigFloat(1) / 2);
  if (!(r <= -1)) r = BigFloat(-1);
  return abs(Complex(N.re - r, N.im));
}

// psi(q) by upward shifts and the Stirling-type tail
// ln q - 1/(2q) - sum_j B_2j / (2j q^{2j}).
Complex psi_em(Complex q) {
  const Complex one(BigFloat(1));
  Complex shifts(BigFloat(0));
  while (q.re < kShiftTarget) {
    shifts += one / q;
    q += one;
  }
  Complex val = log(q) - one / (q + q);
  for (int j = 1; j <= kTailTerms; ++j)
    val -= Complex(bernoulli(2 * j).to_bigfloat() / (2 * j)) * pow_int(q, -2 * j);
  return val - shifts;
}

// Hurwitz zeta at integer s = m >= 2 by upward shifts and the tail
// q^{1-m}/(m-1) + q^{-m}/2 + sum_j B_2j/(2j)! (m)_{2j-1} q^{1-m-2j}.
Complex hurwitz_em(int m, Complex q) {
  const Complex one(BigFloat(1));
  Complex head(BigFloat(0));
  while (q.re < kShiftTarget) {
    head += pow_int(q, -m);
    q += one;
  }
  Complex val = pow_int(q, 1 - m) / Complex(BigFloat(m - 1)) + pow_int(q, -m) / Complex(BigFloat(2));
  Rational fact(1);     // (2j)!
  Rational rising(m);   // (m)_{2j-1}
  for (int j = 1; j <= kTailTerms; ++j) {
    fact *= Rational((2 * j - 1) * 2 * j);
    if (j > 1) rising *= Rational(m + 2 * j - 3) * Rational(m + 2 * j - 2);
    const Rational c = bernoulli(2 * j) / fact * rising;
    val += Complex(c.to_bigfloat()) * pow_int(q, 1 - m - 2 * j);
  }
  return head + val;
}

}  // namespace

BigFloat AsymptoticSeries::constant_term(unsigned digits) const {
  if (a == 1) {
    ScopedPrecision sp(digits);
    return bf_euler_gamma();
  }
  if (a >= 2) return ConstantSymbol::zeta(a).value(digits);
  return -ConstantSymbol::eta(-a).value(digits);
}

BigFloat AsymptoticSeries::eval(const BigFloat& N, Parity parity) const {
  BigFloat tail(0);
  for (int n = order; n >= 1; --n)
    tail = (tail + coeffs[static_cast<std::size_t>(n) - 1].to_bigfloat()) / N;
  if (a < 0 && parity == Parity::odd) tail = -tail;
  BigFloat head = constant_term(current_digits());
  if (a == 1) head += log(N);
  return head + tail;
}

Complex AsymptoticSeries::eval(const Complex& N, Parity parity) const {
  Complex tail(BigFloat(0));
  for (int n = order; n >= 1; --n)
    tail = (tail + Complex(coeffs[static_cast<std::size_t>(n) - 1].to_bigfloat())) / N;
  if (a < 0 && parity == Parity::odd) tail = -tail;
  Complex head(constant_term(current_digits()));
  if (a == 1) head += log(N);
  return head + tail;
}

AsymptoticSeries asymptotic_coeffs(int a, int order) {
  check_exponent(a);
  if (order < 1 || order > 20) throw std::domain_error("order must lie in [1, 20]");
  AsymptoticSeries s;
  s.a = a;
  s.order = order;
  s.coeffs.assign(static_cast<std::size_t>(order), Rational(0));
  if (a == 1) {
    s.coeffs[0] = Rational(1, 2);
    for (int n = 2; n <= order; n += 2)
      s.coeffs[static_cast<std::size_t>(n) - 1] = -bernoulli(n) / Rational(n);
  } else if (a >= 2) {
    if (a - 1 <= order) s.coeffs[static_cast<std::size_t>(a) - 2] = Rational(-1, a - 1);
    if (a <= order) s.coeffs[static_cast<std::size_t>(a) - 1] = Rational(1, 2);
    Rational fact(1);
    Rational rising(a);
    for (int j = 1; a - 1 + 2 * j <= order; ++j) {
      fact *= Rational((2 * j - 1) * 2 * j);
      if (j > 1) rising *= Rational(a + 2 * j - 3) * Rational(a + 2 * j - 2);
      s.coeffs[static_cast<std::size_t>(a - 1 + 2 * j) - 1] = -bernoulli(2 * j) / fact * rising;
    }
  } else {
    const int m = -a;
    for (int i = 0; m + i <= order; ++i) {
      Rational c(binomial(m + i - 1, i));
      if (i % 2) c = -c;
      s.coeffs[static_cast<std::size_t>(m + i) - 1] = c * eta_nonpositive(i);
    }
  }
  return s;
}

Complex continue_single(int a, const Complex& N, Parity parity) {
  check_exponent(a);
  if (pole_distance(N) < BigFloat("1e-8"))
    throw std::domain_error("argument within 1e-8 of a continuation pole");
  const unsigned digits = current_digits();
  const Complex one(BigFloat(1)), two(BigFloat(2));
  if (a > 0) {
    // S_a(N) = S_a(N + t) - sum_{j=1}^t (N + j)^{-a}
    Complex q = N;
    Complex unwind(BigFloat(0));
    while (q.re < kShiftTarget) {
      q += one;
      unwind += pow_int(q, -a);
    }
    Complex val;
    if (a == 1) {
      val = log(q) + Complex(bf_euler_gamma()) + one / (q + q);
      for (int k = 1; k <= kTailTerms; ++k)
        val -= Complex(bernoulli(2 * k).to_bigfloat() / (2 * k)) * pow_int(q, -2 * k);
    } else {
      val = Complex(ConstantSymbol::zeta(a).value(digits)) - hurwitz_em(a, q + one);
    }
    return val - unwind;
  }
  // Alternating: S_{-m}(N) = -eta(m) + (-1)^N Delta_m(N) with
  // Delta_m(N) = sum_{j>=1} (-1)^{j-1} (N+j)^{-m}; the parity flag fixes
  // the continued sign of (-1)^N.
  const int m = -a;
  const Complex q1 = (N + one) / two;
  const Complex q2 = (N + two) / two;
  Complex delta;
  if (m == 1) {
    delta = (psi_em(q2) - psi_em(q1)) / two;
  } else {
    delta = (hurwitz_em(m, q1) - hurwitz_em(m, q2)) / pow_int(two, m);
  }
  const Complex eta_m(ConstantSymbol::eta(m).value(digits));
  return (parity == Parity::even ? delta : -delta) - eta_m;
}

}  // namespace nestsum
