#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "nestsum/continuation/continuation.hpp"
#include "nestsum/sums/constants.hpp"
#include "nestsum/sums/eval.hpp"

using namespace nestsum;

namespace {

bool close(const BigFloat& a, const BigFloat& b, const char* tol) {
  return bf_abs(a - b) < BigFloat(tol);
}

bool cclose(const Complex& a, const Complex& b, const char* tol) {
  return abs(a - b) < BigFloat(tol);
}

Complex random_argument(std::mt19937_64& rng) {
  auto uniform = [&rng](double lo, double hi) {
    return BigFloat(lo) + BigFloat(hi - lo) * (BigFloat(static_cast<long>(rng() % 1000000)) / 1000000);
  };
  return {uniform(0.05, 10.0), uniform(-5.0, 5.0)};
}

Parity parity_of(long N) { return N % 2 == 0 ? Parity::even : Parity::odd; }

}  // namespace

TEST_SUITE("continuation") {

TEST_CASE("integer arguments reproduce the exact sums") {
  ScopedPrecision sp(40);
  CHECK(bf_abs(continue_single(1, Complex(BigFloat(0))).re) < BigFloat("1e-30"));
  for (int a : {1, 2, 3, -1, -2, -3}) {
    for (long N = 1; N <= 200; ++N) {
      const Complex c = continue_single(a, Complex(BigFloat(N)), parity_of(N));
      const BigFloat exact = eval_harmonic(HarmonicIndex{a}, N).to_bigfloat();
      CAPTURE(a);
      CAPTURE(N);
      CHECK(close(c.re, exact, "1e-11"));
      CHECK(bf_abs(c.im) < BigFloat("1e-20"));
    }
  }
  for (int a : {4, 5, -4, -5})
    for (long N : {1L, 7L, 30L})
      CHECK(close(continue_single(a, Complex(BigFloat(N)), parity_of(N)).re,
                  eval_harmonic(HarmonicIndex{a}, N).to_bigfloat(), "1e-11"));
}

TEST_CASE("half-argument closed form") {
  ScopedPrecision sp(40);
  const Complex c = continue_single(1, Complex(BigFloat(1) / 2));
  CHECK(close(c.re, 2 - 2 * bf_ln2(), "1e-12"));
  // independent route: S_1(1/2) = psi(3/2) + gamma_E
  const BigFloat psi32 = ConstantSymbol::psi(Rational(3, 2)).value(40);
  CHECK(close(c.re, psi32 + bf_euler_gamma(), "1e-12"));
  CHECK(bf_abs(c.im) < BigFloat("1e-20"));
}

TEST_CASE("large-N agreement for a = 2") {
  ScopedPrecision sp(50);
  const Complex c = continue_single(2, Complex(BigFloat(1000)));
  CHECK(close(c.re, eval_harmonic(HarmonicIndex{2}, 1000).to_bigfloat(), "1e-12"));
}

TEST_CASE("shift relation at complex arguments") {
  ScopedPrecision sp(40);
  std::mt19937_64 rng(0xC0FFEEull);
  const Complex one(BigFloat(1));
  for (int trial = 0; trial < 20; ++trial) {
    const Complex N = random_argument(rng);
    for (int a : {1, 2, 3}) {
      const Complex lhs = continue_single(a, N + one) - continue_single(a, N);
      CAPTURE(a);
      CHECK(cclose(lhs, pow_int(N + one, -a), "1e-11"));
    }
    for (int m : {1, 2, 3}) {
      // continued (-1)^N makes the shift a reflection:
      // C(N) + C(N+1) = -2 eta(m) + sigma (N+1)^{-m}
      for (Parity p : {Parity::even, Parity::odd}) {
        const BigFloat sigma = p == Parity::even ? BigFloat(1) : BigFloat(-1);
        const Complex lhs = continue_single(-m, N, p) + continue_single(-m, N + one, p);
        const Complex rhs =
            Complex(sigma) * pow_int(N + one, -m) - Complex(2 * ConstantSymbol::eta(m).value(40));
        CAPTURE(m);
        CHECK(cclose(lhs, rhs, "1e-11"));
      }
    }
  }
}

TEST_CASE("simple pole at N = -1") {
  ScopedPrecision sp(40);
  const BigFloat eps("1e-4");
  const std::vector<Complex> dirs{Complex(BigFloat(1)), Complex(BigFloat(-1)),
                                  Complex(BigFloat(0), BigFloat(1)),
                                  Complex(BigFloat(0), BigFloat(-1))};
  for (const Complex& dir : dirs) {
    const Complex N = Complex(BigFloat(-1)) + Complex(eps) * dir;
    const BigFloat scaled = abs(continue_single(1, N)) * eps;
    CHECK(scaled > BigFloat("0.95"));
    CHECK(scaled < BigFloat("1.05"));
  }
}

TEST_CASE("asymptotic series reproduces exact values beyond n0") {
  ScopedPrecision sp(40);
  for (int a : {1, 2, 3, 4, 5, -1, -2, -3, -4, -5}) {
    const AsymptoticSeries s = asymptotic_coeffs(a, 15);
    CHECK(s.n0 == 20);
    CHECK(s.coeffs.size() == 15);
    for (long N : {20L, 35L, 50L, 100L}) {
      CAPTURE(a);
      CAPTURE(N);
      CHECK(close(s.eval(BigFloat(N), parity_of(N)),
                  eval_harmonic(HarmonicIndex{a}, N).to_bigfloat(), "1e-13"));
    }
  }
}

TEST_CASE("series and shifted continuation agree at complex arguments") {
  ScopedPrecision sp(40);
  const Complex N(BigFloat(40), BigFloat(2));
  for (int a : {1, 3, -2}) {
    const AsymptoticSeries s = asymptotic_coeffs(a, 18);
    CAPTURE(a);
    CHECK(cclose(s.eval(N), continue_single(a, N), "1e-14"));
  }
}

TEST_CASE("pinned coefficients") {
  ScopedPrecision sp(40);
  const AsymptoticSeries s1 = asymptotic_coeffs(1, 2);
  CHECK(s1.has_log());
  CHECK(s1.coeffs == std::vector<Rational>{Rational(1, 2), Rational(-1, 12)});
  const AsymptoticSeries s14 = asymptotic_coeffs(1, 4);
  CHECK(s14.coeffs[2] == Rational(0));
  CHECK(s14.coeffs[3] == Rational(1, 120));
  CHECK(close(asymptotic_coeffs(2, 5).constant_term(40), ConstantSymbol::zeta(2).value(40),
              "1e-35"));
  CHECK(close(asymptotic_coeffs(-1, 5).constant_term(40), -bf_ln2(), "1e-35"));
  const AsymptoticSeries sm1 = asymptotic_coeffs(-1, 4);
  CHECK(sm1.coeffs[0] == Rational(1, 2));
  CHECK(sm1.coeffs[1] == Rational(-1, 4));
  CHECK(sm1.coeffs[2] == Rational(0));
}

TEST_CASE("domain and pole errors") {
  CHECK_THROWS_AS(continue_single(0, Complex(BigFloat(2))), std::domain_error);
  CHECK_THROWS_AS(continue_single(6, Complex(BigFloat(2))), std::domain_error);
  CHECK_THROWS_AS(continue_single(1, Complex(BigFloat(-1))), std::domain_error);
  CHECK_THROWS_AS(continue_single(1, Complex(BigFloat("-2.000000001"))), std::domain_error);
  CHECK_THROWS_AS(continue_single(-2, Complex(BigFloat(-3), BigFloat("1e-9"))),
                  std::domain_error);
  CHECK_NOTHROW(continue_single(1, Complex(BigFloat("-1.0001"))));
  CHECK_THROWS_AS(asymptotic_coeffs(0, 5), std::domain_error);
  CHECK_THROWS_AS(asymptotic_coeffs(1, 0), std::domain_error);
  CHECK_THROWS_AS(asymptotic_coeffs(1, 21), std::domain_error);
  CHECK_THROWS_AS(asymptotic_coeffs(6, 5), std::domain_error);
}

}  // TEST_SUITE
