// Acceptance gate: one self-contained check per shipped guarantee, one
// PASS/FAIL line each, nonzero exit when anything fails. Tolerances and
// time budgets are pinned next to each check.

#include <chrono>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include "nestsum/algebra/basis.hpp"
#include "nestsum/algebra/counting.hpp"
#include "nestsum/algebra/lyndon.hpp"
#include "nestsum/algebra/products.hpp"
#include "nestsum/cli/expr.hpp"
#include "nestsum/continuation/continuation.hpp"
#include "nestsum/exact/complex.hpp"
#include "nestsum/polylog/elliptic.hpp"
#include "nestsum/polylog/hpl.hpp"
#include "nestsum/polylog/mellin.hpp"
#include "nestsum/sums/constants.hpp"
#include "nestsum/sums/eval.hpp"
#include "nestsum/sums/limits.hpp"

using namespace nestsum;

namespace {

struct Failure {
  std::string detail;
};

void require(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

// ---- 1. counting closed forms -------------------------------------------

void check_counting() {
  Int p(1);  // 3^(w-1)
  for (int w = 1; w <= 10; ++w) {
    require(count_all(w) == 2 * p, "count_all(" + std::to_string(w) + ") != 2*3^(w-1)");
    p *= 3;
  }
  require(count_ADH(8) == 486, "count_ADH(8) != 486");
  require(count_all(8) == 4374, "count_all(8) != 4374");
}

// ---- 2. Lyndon counts and basis reduction -------------------------------

std::vector<HarmonicIndex> all_indices_of_weight(int w) {
  std::vector<HarmonicIndex> out;
  std::vector<int> cur;
  const auto gen = [&](const auto& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(HarmonicIndex(cur));
      return;
    }
    for (int m = 1; m <= remaining; ++m)
      for (int s : {1, -1}) {
        cur.push_back(s * m);
        self(self, remaining - m);
        cur.pop_back();
      }
  };
  gen(gen, w);
  return out;
}

Rational eval_basis_poly(const BasisPolynomial& poly, long N) {
  Rational total;
  for (const auto& [mono, c] : poly.terms()) {
    Rational prod(1);
    for (const auto& idx : mono) prod = prod * eval_harmonic(idx, N);
    total = total + c * prod;
  }
  return total;
}

void check_lyndon_basis() {
  for (int w = 1; w <= 6; ++w) {
    const Int expected = count_A(w);
    const Int got = Int(static_cast<long>(lyndon_words(w).size()));
    require(got == expected, "weight-" + std::to_string(w) + " Lyndon count != count_A");
  }
  for (int w = 1; w <= 4; ++w) {
    const auto indices = all_indices_of_weight(w);
    require(indices.size() == static_cast<std::size_t>(static_cast<long>(count_all(w))),
            "index enumeration at weight " + std::to_string(w) + " is off");
    for (const auto& idx : indices) {
      const BasisPolynomial poly = reduce_to_basis(idx);
      for (long N = 1; N <= 30; ++N)
        require(eval_basis_poly(poly, N) == eval_harmonic(idx, N),
                "basis reduction mismatch at weight " + std::to_string(w));
    }
  }
}

// ---- 3. product oracles --------------------------------------------------

void check_products() {
  std::mt19937 rng(425001u);
  const auto rand_index = [&rng]() {
    const int d = 1 + static_cast<int>(rng() % 3);
    std::vector<int> e(d);
    for (int& v : e) {
      const int m = 1 + static_cast<int>(rng() % 3);
      v = (rng() % 2 ? m : -m);
    }
    return HarmonicIndex(std::move(e));
  };
  for (int it = 0; it < 200; ++it) {
    const HarmonicIndex u = rand_index(), v = rand_index();
    const auto lc = stuffle(u, v);
    for (long N = 1; N <= 20; ++N) {
      Rational rhs;
      for (const auto& [w, c] : lc.terms()) rhs = rhs + c * eval_harmonic(w, N);
      require(rhs == eval_harmonic(u, N) * eval_harmonic(v, N),
              "stuffle mismatch at iteration " + std::to_string(it));
    }
  }

  const BigFloat x("0.5"), tol("1e-10");
  std::vector<std::vector<int>> words;
  const int letters[3] = {0, 1, -1};
  for (int len = 1; len <= 3; ++len)
    for (int code = 0; code < (len == 1 ? 3 : len == 2 ? 9 : 27); ++code) {
      std::vector<int> w(len);
      int c = code;
      for (int i = 0; i < len; ++i, c /= 3) w[i] = letters[c % 3];
      words.push_back(std::move(w));
    }
  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.size() + v.size() > 4) continue;
      require(verify_shuffle(PolyLogWord::harmonic(u), PolyLogWord::harmonic(v), x, tol),
              "shuffle identity failed at x = 0.5");
    }
}

// ---- 4. moment-space identity -------------------------------------------

void check_mellin_identity() {
  for (long N = 1; N <= 6; ++N)
    require(verify_mellin_identity(N, BigFloat("1e-8")),
            "moment identity failed at N = " + std::to_string(N));
}

// ---- 5. closed-form limit constant --------------------------------------

void check_limit_constant() {
  const unsigned digits = 30;
  ScopedPrecision sp(digits);
  const LimitResult lr = limit_to_infinity(HarmonicIndex{-2, 1, 1}, digits);
  require(lr.converged(), "limit of S[-2,1,1] did not converge");
  const BigFloat l2 = bf_ln2();
  const BigFloat z2 = ConstantSymbol::zeta(2).value(digits);
  const BigFloat z3 = ConstantSymbol::zeta(3).value(digits);
  const BigFloat li4 = ConstantSymbol::li_half(4).value(digits);
  const BigFloat closed =
      -li4 - l2 * l2 * l2 * l2 / 24 + l2 * l2 * z2 / 4 - 7 * l2 * z3 / 8 + z2 * z2 / 8;
  require(bf_abs(lr.value - closed) < BigFloat("1e-8"), "limit constant off by more than 1e-8");
}

// ---- 6. argument transform ----------------------------------------------

void check_arg_transform() {
  for (const char* x : {"0.1", "0.3", "0.5", "0.7", "0.9"})
    require(verify_arg_transform(BigFloat(x), BigFloat("1e-10")),
            std::string("argument transform failed at x = ") + x);
}

// ---- 7. elliptic moments -------------------------------------------------

Rational elliptic_moment_closed(long N) {
  Int c(1);
  for (long i = 1; i <= N; ++i) c = c * Int(N + i) / Int(i);  // C(2N, N)
  return Rational(4).pow(2 * N + 1) / Rational(c * c * Int((2 * N + 1) * (2 * N + 1)));
}

void check_elliptic_moments() {
  // The N = 0 integrand behaves as ln(1/x) at 0, which makes the dyadic
  // sliver closure first-order; the quadrature therefore runs at 1e-9
  // while the acceptance bound stays at the contractual 1e-6.
  const auto T = [](const BigFloat& y) { return eval_T(y, BigFloat("1e-15")); };
  for (long N = 0; N <= 4; ++N) {
    const BigFloat got = mellin_moment(T, N, BigFloat("1e-9"));
    require(bf_abs(got - elliptic_moment_closed(N).to_bigfloat()) < BigFloat("1e-6"),
            "elliptic moment off at N = " + std::to_string(N));
  }
}

// ---- 8. analytic continuation -------------------------------------------

void check_continuation() {
  ScopedPrecision sp(30);
  const BigFloat tol("1e-11");
  for (int a : {1, 2, 3, -1, -2, -3})
    for (long N = 1; N <= 200; ++N) {
      const Parity parity = N % 2 == 0 ? Parity::even : Parity::odd;
      const Complex got = continue_single(a, Complex(BigFloat(N)), parity);
      const BigFloat exact = eval_harmonic(HarmonicIndex{a}, N).to_bigfloat();
      require(bf_abs(got.re - exact) < tol && bf_abs(got.im) < tol,
              "continuation mismatch at a = " + std::to_string(a) + ", N = " + std::to_string(N));
    }

  // Simple pole at N = -1 for the a = 1 continuation: residue magnitude 1.
  const BigFloat eps("1e-4");
  for (int dir = 0; dir < 4; ++dir) {
    const Complex offset = dir == 0   ? Complex(eps)
                           : dir == 1 ? Complex(-eps)
                           : dir == 2 ? Complex(BigFloat(0), eps)
                                      : Complex(BigFloat(0), -eps);
    const Complex z = Complex(BigFloat(-1)) + offset;
    const BigFloat mag = abs(continue_single(1, z, Parity::even)) * eps;
    require(mag > BigFloat("0.95") && mag < BigFloat("1.05"),
            "pole residue probe failed in direction " + std::to_string(dir));
  }
}

// ---- 9. property suites --------------------------------------------------

void property_shift() {
  ScopedPrecision sp(40);
  std::mt19937 rng(990017u);
  const auto rand_n = [&rng]() {
    const double re = 0.05 + (rng() % 1000000) * 9.95e-6;
    const double im = -5.0 + (rng() % 1000000) * 1e-5;
    return Complex(BigFloat(re), BigFloat(im));
  };
  const BigFloat tol("1e-11");
  const Complex one(BigFloat(1));
  for (int it = 0; it < 20; ++it) {
    const Complex N = rand_n();
    const Complex Np1 = N + one;
    for (int a : {1, 2, 3}) {
      const Complex lhs = continue_single(a, Np1) - continue_single(a, N);
      require(abs(lhs - one / pow_int(Np1, a)) < tol, "shift relation failed for a > 0");
    }
    for (int a : {-1, -2, -3}) {
      const int m = -a;
      // Even/odd continuations replace (-1)^N by a constant sign s, turning
      // the shift into the reflection C(N) + C(N+1) = -2 eta(m) + s (N+1)^-m.
      for (Parity parity : {Parity::even, Parity::odd}) {
        const BigFloat s(parity == Parity::even ? 1 : -1);
        const Complex lhs = continue_single(a, N, parity) + continue_single(a, Np1, parity);
        const Complex rhs = Complex(-2 * ConstantSymbol::eta(m).value(40)) +
                            Complex(s) / pow_int(Np1, m);
        require(abs(lhs - rhs) < tol, "reflection shift failed for a < 0");
      }
    }
  }
}

void property_derivative() {
  std::mt19937 rng(550099u);
  const BigFloat h("1e-6"), eval_tol("1e-16"), tol("1e-6");
  const int letters[3] = {0, 1, -1};
  for (int it = 0; it < 20; ++it) {
    const int len = 1 + static_cast<int>(rng() % 4);
    std::vector<int> bs(len);
    for (int& b : bs) b = letters[rng() % 3];
    const PolyLogWord w = PolyLogWord::harmonic(bs);
    const PolyLogWord rest = PolyLogWord::harmonic({bs.begin() + 1, bs.end()});
    for (const char* xs : {"0.3", "0.6"}) {
      const BigFloat x(xs);
      const BigFloat inner = rest.empty() ? BigFloat(1) : hpl_eval(rest, x, eval_tol);
      const BigFloat expect = w.letters().front().value(x) * inner;
      const BigFloat diff =
          (hpl_eval(w, x + h, eval_tol) - hpl_eval(w, x - h, eval_tol)) / (2 * h);
      require(bf_abs(diff - expect) < tol, "derivative check failed for " + w.str());
    }
  }
}

void property_trailing_zeros() {
  for (const char* xs : {"0.3", "0.7"}) {
    const BigFloat x(xs);
    BigFloat factorial(1);
    for (int k = 1; k <= 5; ++k) {
      factorial *= k;
      const PolyLogWord zeros = PolyLogWord::harmonic(std::vector<int>(k, 0));
      const BigFloat expect = pow(log(x), k) / factorial;
      require(bf_abs(hpl_eval(zeros, x, BigFloat("1e-14")) - expect) < BigFloat("1e-12"),
              "pure-zero word mismatch at k = " + std::to_string(k));
    }
  }
}

void property_parser_roundtrip() {
  using namespace nestsum::cli;
  std::mt19937 rng(881230u);
  const auto ri = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
  };
  const auto rnum = [&](bool sign, bool decimal) {
    std::string s = sign && ri(0, 1) ? "-" : "";
    s += std::to_string(ri(1, 12));
    const int kind = ri(0, 2);
    if (kind == 1)
      s += "/" + std::to_string(ri(2, 9));
    else if (kind == 2 && decimal)
      s += "." + std::to_string(ri(0, 99));
    return s;
  };
  for (int it = 0; it < 500; ++it) {
    std::string text;
    switch (it % 4) {
      case 0: {
        text = "S[";
        for (int i = 0, d = ri(1, 4); i < d; ++i) {
          int v = 0;
          while (v == 0) v = ri(-5, 5);
          text += (i ? "," : "") + std::to_string(v);
        }
        text += "]";
        if (ri(0, 2)) text += ri(0, 4) ? "(" + std::to_string(ri(0, 50)) + ")" : "(inf)";
        break;
      }
      case 1: {
        const int d = ri(1, 3);
        text = "S[";
        for (int i = 0; i < d; ++i) text += (i ? "," : "") + std::to_string(ri(1, 4));
        text += "]({";
        for (int i = 0; i < d; ++i) {
          std::string w = rnum(true, false);
          text += (i ? "," : "") + w;
        }
        text += "};" + std::to_string(ri(1, 30)) + ")";
        break;
      }
      case 2: {
        text = ri(0, 2) ? "H[" : "Hs[";
        const char* ls[] = {"0", "1", "-1", "2", "-1/2", "{4,1}", "{6,1}", "w12", "w17"};
        for (int i = 0, d = ri(1, 4); i < d; ++i) text += (i ? "," : "") + std::string(ls[ri(0, 8)]);
        text += "]";
        if (ri(0, 1)) text += "(0." + std::to_string(ri(1, 99)) + ")";
        break;
      }
      default: {
        text = "S[(" + std::to_string(ri(2, 6)) + "," + std::to_string(ri(0, 1)) + "," +
               std::to_string(ri(1, 3)) + ")](" + rnum(true, true);
        if (ri(0, 2) == 0) text += "+" + rnum(false, true) + "i";
        text += ")";
        break;
      }
    }
    Expression e;
    try {
      e = parse(text);
    } catch (const std::domain_error&) {
      continue;  // generator emitted a semantically invalid expression
    }
    require(parse(print(e)) == e, "round-trip failed for: " + text);
  }
}

void check_properties() {
  property_shift();
  property_derivative();
  property_trailing_zeros();
  property_parser_roundtrip();
}

// ---- driver --------------------------------------------------------------

struct Criterion {
  int id;
  const char* label;
  double budget_s;
  void (*fn)();
};

const Criterion kCriteria[] = {
    {1, "counting closed forms", 1.0, check_counting},
    {2, "Lyndon counts and exact basis reduction", 30.0, check_lyndon_basis},
    {3, "stuffle (exact) and shuffle (1e-10) products", 60.0, check_products},
    {4, "moment-space identity for S[-2,1,1] (1e-8)", 120.0, check_mellin_identity},
    {5, "infinite-limit constant of S[-2,1,1] (1e-8)", 30.0, check_limit_constant},
    {6, "argument transform x -> (1-x)/(1+x) (1e-10)", 60.0, check_arg_transform},
    {7, "elliptic integral moments (1e-6)", 120.0, check_elliptic_moments},
    {8, "analytic continuation vs exact values (1e-11)", 30.0, check_continuation},
    {9, "property suites (shift, derivative, zeros, parser)", 120.0, check_properties},
};

}  // namespace

int main() {
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.fn();
    } catch (const Failure& f) {
      ok = false;
      detail = f.detail;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && elapsed > c.budget_s) {
      ok = false;
      detail = "time budget exceeded";
    }
    std::printf("criterion %d: %s %s [%.2f s / %.0f s]%s%s\n", c.id, ok ? "PASS" : "FAIL", c.label,
                elapsed, c.budget_s, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
