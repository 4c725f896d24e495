#include <random>
#include <thread>
#include <vector>

#include "doctest.h"
#include "nestsum/algebra/products.hpp"
#include "nestsum/sums/binomial.hpp"
#include "nestsum/sums/constants.hpp"
#include "nestsum/sums/eval.hpp"
#include "nestsum/sums/limits.hpp"

using namespace nestsum;

namespace {

// Flat-loop oracle for depth <= 3: the definition written out as explicit
// nested loops, no shared state with the library evaluator.
Rational flat_eval(const std::vector<int>& w, long N) {
  auto f = [](int a, long k) {
    Rational t = Rational(Int(k)).pow(a < 0 ? a : -a);
    return (a < 0 && k % 2 != 0) ? -t : t;
  };
  Rational total(0);
  switch (w.size()) {
    case 1:
      for (long k1 = 1; k1 <= N; ++k1) total += f(w[0], k1);
      return total;
    case 2:
      for (long k1 = 1; k1 <= N; ++k1)
        for (long k2 = 1; k2 <= k1; ++k2) total += f(w[0], k1) * f(w[1], k2);
      return total;
    case 3:
      for (long k1 = 1; k1 <= N; ++k1)
        for (long k2 = 1; k2 <= k1; ++k2)
          for (long k3 = 1; k3 <= k2; ++k3)
            total += f(w[0], k1) * f(w[1], k2) * f(w[2], k3);
      return total;
    default:
      REQUIRE(false);
      return total;
  }
}

HarmonicIndex random_index(std::mt19937_64& rng, int max_weight, int max_depth) {
  std::vector<int> entries;
  int weight_left = max_weight;
  int depth = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_depth));
  for (int i = 0; i < depth && weight_left > 0; ++i) {
    int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(weight_left));
    if (i + 1 < depth && m == weight_left && weight_left > 1) m = weight_left - 1;
    entries.push_back(rng() % 2 ? m : -m);
    weight_left -= m;
  }
  return HarmonicIndex(std::move(entries));
}

bool close(const BigFloat& a, const BigFloat& b, const char* tol) {
  return bf_abs(a - b) < BigFloat(tol);
}

}  // namespace

TEST_SUITE("sums") {

TEST_CASE("eval_harmonic pins") {
  CHECK(eval_harmonic(HarmonicIndex{1}, 3) == Rational(11, 6));
  CHECK(eval_harmonic(HarmonicIndex{-2, 1, 1}, 2) == Rational(-9, 16));
  CHECK(eval_harmonic(HarmonicIndex{5}, 0) == Rational(0));
  CHECK(eval_harmonic(HarmonicIndex{}, 0) == Rational(1));
  CHECK(eval_harmonic(HarmonicIndex{}, 7) == Rational(1));
  CHECK(eval_harmonic(HarmonicIndex{-1}, 4) == Rational(-7, 12));
  CHECK_THROWS_AS(eval_harmonic(HarmonicIndex{1}, -1), std::domain_error);
}

TEST_CASE("eval_harmonic vs flat loops") {
  std::mt19937_64 rng(20260823u);
  for (int round = 0; round < 100; ++round) {
    auto idx = random_index(rng, 5, 3);
    for (long N = 1; N <= 15; ++N)
      REQUIRE(eval_harmonic(idx, N) == flat_eval(idx.entries, N));
  }
}

TEST_CASE("shift property") {
  std::mt19937_64 rng(11u);
  for (int round = 0; round < 50; ++round) {
    auto idx = random_index(rng, 5, 3);
    HarmonicIndex tail(std::vector<int>(idx.entries.begin() + 1, idx.entries.end()));
    const int b = idx.entries.front();
    const int mag = b < 0 ? -b : b;
    for (long N = 1; N <= 20; ++N) {
      Rational step = Rational(Int(N + 1)).pow(-mag) * eval_harmonic(tail, N + 1);
      if (b < 0 && (N + 1) % 2 != 0) step = -step;
      REQUIRE(eval_harmonic(idx, N + 1) - eval_harmonic(idx, N) == step);
    }
  }
}

TEST_CASE("stuffle consistency with evaluation") {
  std::mt19937_64 rng(99u);
  for (int round = 0; round < 60; ++round) {
    auto u = random_index(rng, 3, 2);
    auto v = random_index(rng, 2, 2);
    auto prod = stuffle(u, v);
    for (long N = 1; N <= 15; ++N) {
      Rational lhs = eval_harmonic(u, N) * eval_harmonic(v, N);
      Rational rhs(0);
      for (const auto& [w, c] : prod.terms()) rhs += c * eval_harmonic(w, N);
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("eval_ssum pins and degeneration") {
  GeneralIndex half_minus{SEntry{1, Rational(1, 2)}, SEntry{2, Rational(-1)}};
  CHECK(eval_ssum(half_minus, 1) == Rational(-1, 2));

  GeneralIndex two{SEntry{1, Rational(2)}};
  CHECK(eval_ssum(two, 3) == Rational(20, 3));

  GeneralIndex s2{SEntry{2, Rational(1)}};
  for (long N = 1; N <= 50; ++N)
    CHECK(eval_ssum(s2, N) == eval_harmonic(HarmonicIndex{2}, N));

  std::mt19937_64 rng(7u);
  for (int round = 0; round < 40; ++round) {
    auto idx = random_index(rng, 4, 3);
    auto gen = GeneralIndex::from_harmonic(idx);
    for (long N = 1; N <= 12; ++N) REQUIRE(eval_ssum(gen, N) == eval_harmonic(idx, N));
  }
}

TEST_CASE("eval_cyclotomic single form") {
  CHECK(eval_cyclotomic_single(2, 1, 1, 1) == Rational(4, 3));
  CHECK(eval_cyclotomic_single(2, 1, 1, 0) == Rational(1));
  CHECK(eval_cyclotomic_single(3, 2, 2, 2) == Rational(1, 4) + Rational(1, 25) + Rational(1, 64));
  CHECK(eval_cyclotomic_single(2, 1, -1, 2) == Rational(1) - Rational(1, 3) + Rational(1, 5));
  CHECK_THROWS_AS(eval_cyclotomic_single(2, 2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(eval_cyclotomic_single(1, 0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(eval_cyclotomic_single(2, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("eval_cyclotomic nested form") {
  CyclotomicIndex plain{CycEntry{1, 0, 2, Rational(1)}};
  for (long N = 1; N <= 20; ++N)
    CHECK(eval_cyclotomic(plain, N) == eval_harmonic(HarmonicIndex{2}, N));

  CyclotomicIndex odd{CycEntry{2, 1, 1, Rational(1)}};
  CHECK(eval_cyclotomic(odd, 2) == Rational(8, 15));  // 1/3 + 1/5

  CyclotomicIndex nested{CycEntry{2, 1, 1, Rational(1)}, CycEntry{1, 0, 1, Rational(-1)}};
  // k=1: 1/3 * (-1); k=2: 1/5 * (-1 + 1/2)
  CHECK(eval_cyclotomic(nested, 2) == Rational(-1, 3) - Rational(1, 10));

  CHECK(eval_cyclotomic(odd, 0) == Rational(0));
}

TEST_CASE("duplication relation") {
  CHECK(eval_harmonic(HarmonicIndex{2}, 2) + eval_harmonic(HarmonicIndex{-2}, 2) ==
        Rational(1, 2));
  CHECK(Rational(1, 2) == Rational(1, 2) * eval_harmonic(HarmonicIndex{2}, 1));
  CHECK(duplication_check(2, 1));
  CHECK(duplication_check(3, 2));
  CHECK(duplication_check(-2, 5));
  CHECK(duplication_check(1, 4));
  for (int a = 1; a <= 4; ++a)
    for (long N = 1; N <= 10; ++N) CHECK(duplication_check(a, N));
  // Negative control: the relation fails when the right side is perturbed.
  Rational lhs = eval_harmonic(HarmonicIndex{2}, 2) + eval_harmonic(HarmonicIndex{-2}, 2);
  CHECK(lhs != Rational(1, 2) * eval_harmonic(HarmonicIndex{2}, 1) + Rational(1, 1000000));
}

TEST_CASE("binomial nested sum") {
  BinomialSumSpec spec;
  BinomialLevel outer;
  outer.binom = BinomialLevel::Binom::numerator;
  outer.base = Rational(-2);
  BinomialLevel mid;
  mid.binom = BinomialLevel::Binom::denominator;
  mid.denom_a = 1;
  mid.denom_b = 0;
  mid.denom_power = 1;
  spec.levels = {outer, mid};
  spec.inner = GeneralIndex{SEntry{1, Rational(1, 2)}, SEntry{2, Rational(-1)}};

  // Frozen against an independent brute-force fraction script.
  CHECK(eval_binomial_nested(spec, 0) == Rational(0));
  CHECK(eval_binomial_nested(spec, 1) == Rational(1));
  CHECK(eval_binomial_nested(spec, 2) == Rational(-99, 16));
  CHECK(eval_binomial_nested(spec, 3) == Rational(56257, 1296));
  CHECK(eval_binomial_nested(spec, 4) == Rational(-2117353, 6912));

  BinomialSumSpec bad;
  CHECK_THROWS_AS(eval_binomial_nested(bad, 1), std::invalid_argument);
  bad.levels = {BinomialLevel{}};
  bad.levels[0].denom_a = -1;
  bad.levels[0].denom_b = 1;
  CHECK_THROWS_AS(eval_binomial_nested(bad, 1), std::invalid_argument);
}

TEST_CASE("constants") {
  ScopedPrecision sp(60);
  const BigFloat pi = bf_pi();

  CHECK(close(ConstantSymbol::zeta(2).value(50), pi * pi / 6, "1e-48"));
  CHECK(close(ConstantSymbol::zeta(4).value(50), pi * pi * pi * pi / 90, "1e-48"));
  CHECK(close(ConstantSymbol::zeta(3).value(50), BigFloat("1.20205690315959428540"), "1e-20"));
  CHECK(close(ConstantSymbol::eta(1).value(50), bf_ln2(), "1e-48"));
  CHECK(close(ConstantSymbol::eta(2).value(50), pi * pi / 12, "1e-46"));
  CHECK(close(ConstantSymbol::ln2().value(50), BigFloat("0.69314718055994530942"), "1e-20"));
  CHECK(close(ConstantSymbol::li_half(1).value(50), bf_ln2(), "1e-48"));
  CHECK(close(ConstantSymbol::li_half(4).value(50),
              BigFloat("0.5174790616738993863307581618988629456"), "1e-35"));
  CHECK(close(ConstantSymbol::catalan().value(50), BigFloat("0.91596559417721901505"), "1e-20"));

  // psi(1/2) = -gamma - 2 ln 2; recurrence and reflection checks.
  CHECK(close(ConstantSymbol::psi(Rational(1, 2)).value(50), -bf_euler_gamma() - 2 * bf_ln2(),
              "1e-45"));
  CHECK(close(ConstantSymbol::psi(Rational(3, 2)).value(50),
              -bf_euler_gamma() - 2 * bf_ln2() + 2, "1e-45"));
  CHECK(close(ConstantSymbol::psi(Rational(4, 3)).value(50) -
                  ConstantSymbol::psi(Rational(1, 3)).value(50),
              BigFloat(3), "1e-45"));
  CHECK(close(ConstantSymbol::psi(Rational(3, 4)).value(50) -
                  ConstantSymbol::psi(Rational(1, 4)).value(50),
              pi, "1e-45"));

  CHECK(close(ConstantSymbol::ti2(Rational(1)).value(50), bf_catalan(), "1e-48"));
  CHECK(close(ConstantSymbol::ti2(Rational(-1)).value(50), -bf_catalan(), "1e-48"));
  CHECK(close(ConstantSymbol::ti2(Rational(1, 2)).value(50) +
                  ConstantSymbol::ti2(Rational(-1, 2)).value(50),
              BigFloat(0), "1e-48"));

  CHECK(ConstantSymbol::sigma0().is_divergent());
  CHECK_FALSE(ConstantSymbol::zeta(2).is_divergent());
  CHECK_THROWS_AS(ConstantSymbol::sigma0().value(30), std::domain_error);
  CHECK_THROWS_AS(ConstantSymbol::zeta(1), std::invalid_argument);
  CHECK_THROWS_AS(ConstantSymbol::li_half(0), std::invalid_argument);
  CHECK_THROWS_AS(ConstantSymbol::psi(Rational(-1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(ConstantSymbol::ti2(Rational(2)), std::invalid_argument);

  CHECK(ConstantSymbol::zeta(3).name() == "zeta_3");
  CHECK(ConstantSymbol::li_half(4).name() == "Li_4(1/2)");
  CHECK(ConstantSymbol::sigma0().name() == "sigma_0");

  // Raising the precision refines, not changes, the value.
  CHECK(close(ConstantSymbol::zeta(2).value(80), ConstantSymbol::zeta(2).value(40), "1e-38"));
}

TEST_CASE("limit pins against series oracles") {
  auto s2 = limit_to_infinity(HarmonicIndex{2}, 30);
  REQUIRE(s2.converged());
  CHECK(close(s2.value, ConstantSymbol::zeta(2).value(40), "1e-12"));

  auto s3 = limit_to_infinity(HarmonicIndex{3}, 30);
  REQUIRE(s3.converged());
  CHECK(close(s3.value, ConstantSymbol::zeta(3).value(40), "1e-12"));

  // S_{2,1}(inf) = 2 zeta_3.
  auto s21 = limit_to_infinity(HarmonicIndex{2, 1}, 30);
  REQUIRE(s21.converged());
  CHECK(close(s21.value, 2 * ConstantSymbol::zeta(3).value(40), "1e-11"));

  auto sm1 = limit_to_infinity(HarmonicIndex{-1}, 30);
  REQUIRE(sm1.converged());
  CHECK(close(sm1.value, -ConstantSymbol::ln2().value(40), "1e-12"));

  auto sm2 = limit_to_infinity(HarmonicIndex{-2}, 30);
  REQUIRE(sm2.converged());
  CHECK(close(sm2.value, -ConstantSymbol::eta(2).value(40), "1e-12"));
}

TEST_CASE("limit matches the printed constant combination") {
  ScopedPrecision sp(40);
  const BigFloat ln2 = ConstantSymbol::ln2().value(40);
  const BigFloat z2 = ConstantSymbol::zeta(2).value(40);
  const BigFloat z3 = ConstantSymbol::zeta(3).value(40);
  const BigFloat li4 = ConstantSymbol::li_half(4).value(40);
  const BigFloat expect =
      -li4 - ln2 * ln2 * ln2 * ln2 / 24 + ln2 * ln2 * z2 / 4 - 7 * ln2 * z3 / 8 + z2 * z2 / 8;

  auto r = limit_to_infinity(HarmonicIndex{-2, 1, 1}, 30);
  REQUIRE(r.converged());
  CHECK(close(r.value, expect, "1e-8"));
  CHECK(close(r.value, BigFloat("-0.720344856853789"), "1e-12"));
}

TEST_CASE("limit direct path for fractional weights") {
  GeneralIndex geo{SEntry{1, Rational(1, 2)}};
  auto r = limit_to_infinity(geo, 40);
  REQUIRE(r.converged());
  CHECK(close(r.value, ConstantSymbol::ln2().value(50), "1e-30"));

  // sum_k (1/2)^k S_1(k) / k = Li_2(1/2) + ln^2(2)/2 = zeta_2 / 2.
  GeneralIndex mixed{SEntry{1, Rational(1, 2)}, SEntry{1, Rational(1)}};
  auto m = limit_to_infinity(mixed, 40);
  REQUIRE(m.converged());
  CHECK(close(m.value, ConstantSymbol::zeta(2).value(50) / 2, "1e-25"));
}

TEST_CASE("limit divergence reports") {
  auto h = limit_to_infinity(HarmonicIndex{1}, 20);
  CHECK(h.kind == LimitResult::Kind::diverges_sigma0);
  CHECK(h.sigma0_power == 1);

  auto hh = limit_to_infinity(HarmonicIndex{1, 1}, 20);
  CHECK(hh.kind == LimitResult::Kind::diverges_sigma0);
  CHECK(hh.sigma0_power == 2);

  auto hm = limit_to_infinity(HarmonicIndex{1, -2}, 20);
  CHECK(hm.kind == LimitResult::Kind::diverges_sigma0);
  CHECK(hm.sigma0_power == 1);

  GeneralIndex big{SEntry{1, Rational(2)}};
  auto b = limit_to_infinity(big, 20);
  CHECK(b.kind == LimitResult::Kind::diverges_weight);
  CHECK(b.note.find("exponential") != std::string::npos);
}

TEST_CASE("limit monotone bracket invariant") {
  // Positive terms: partial sums increase monotonically.
  Rational prev(0);
  for (long N = 1; N <= 30; ++N) {
    Rational cur = eval_harmonic(HarmonicIndex{3}, N);
    CHECK(cur > prev);
    prev = cur;
  }
  auto r = limit_to_infinity(HarmonicIndex{3}, 30);
  REQUIRE(r.converged());
  REQUIRE(r.iterates.size() >= 2);
  const BigFloat& a = r.iterates[r.iterates.size() - 2];
  const BigFloat& b = r.iterates.back();
  const BigFloat lo = a < b ? a : b, hi = a < b ? b : a;
  CHECK(r.value >= lo);
  CHECK(r.value <= hi);
}

TEST_CASE("memo concurrency smoke") {
  std::vector<std::thread> pool;
  std::vector<Rational> got(4);
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([t, &got] { got[static_cast<std::size_t>(t)] =
                                      eval_harmonic(HarmonicIndex{-2, 1, 1}, 60); });
  for (auto& th : pool) th.join();
  for (int t = 1; t < 4; ++t) CHECK(got[0] == got[static_cast<std::size_t>(t)]);
}

}  // TEST_SUITE
