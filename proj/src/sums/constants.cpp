#include "nestsum/sums/constants.hpp"

#include <stdexcept>

#include "nestsum/exact/number_theory.hpp"

namespace nestsum {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::cos;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sin;

// Euler-Maclaurin: zeta(k) = sum_{n<=M} n^-k + M^(1-k)/(k-1) - M^-k/2
//   + sum_j B_{2j}/(2j)! * k(k+1)...(k+2j-2) * M^(1-k-2j).
// The correction series is asymptotic; with M ~ digits its terms drop far
// below the target before turning around.
BigFloat zeta_value(int k, unsigned digits) {
  ScopedPrecision sp(digits + 20);
  const long M = static_cast<long>(digits) + 10;
  BigFloat s(0);
  for (long n = 1; n <= M; ++n) s += 1 / pow(BigFloat(n), k);
  const BigFloat Mf(M);
  s += pow(Mf, 1 - k) / (k - 1);
  s -= pow(Mf, -k) / 2;
  const BigFloat eps = pow(BigFloat(10), -static_cast<int>(digits) - 10);
  BigFloat rising(k);        // k(k+1)...(k+2j-2), updated per j
  BigFloat fact(2);          // (2j)!
  BigFloat mpow = pow(Mf, -k - 1);
  BigFloat prev_mag(0);
  for (int j = 1; j <= 4 * static_cast<int>(digits); ++j) {
    BigFloat term = bernoulli(2 * j).to_bigfloat() / fact * rising * mpow;
    const BigFloat mag = abs(term);
    if (j > 1 && prev_mag != 0 && mag > prev_mag) break;  // asymptotic turnaround
    s += term;
    if (mag < eps) break;
    prev_mag = mag;
    rising *= (k + 2 * j - 1) * (k + 2 * j);
    fact *= (2 * j + 1) * (2 * j + 2);
    mpow /= Mf * Mf;
  }
  return s;
}

BigFloat eta_value(int k, unsigned digits) {
  if (k == 1) {
    ScopedPrecision sp(digits + 10);
    return bf_ln2();
  }
  ScopedPrecision sp(digits + 20);
  return (1 - pow(BigFloat(2), 1 - k)) * zeta_value(k, digits + 10);
}

BigFloat li_half_value(int k, unsigned digits) {
  ScopedPrecision sp(digits + 15);
  const long terms = static_cast<long>(3.33 * (digits + 8)) + 4;
  BigFloat s(0), p(1);
  for (long n = 1; n <= terms; ++n) {
    p /= 2;
    s += p / pow(BigFloat(n), k);
  }
  return s;
}

BigFloat psi_value(const Rational& x, unsigned digits) {
  if (x.sign() <= 0) throw std::domain_error("digamma evaluated at rational x > 0 only");
  ScopedPrecision sp(digits + 20);
  // Shift into (0,1]: psi(x) = psi(x-1) + 1/(x-1).
  Rational t = x;
  BigFloat shift(0);
  while (t > Rational(1)) {
    t -= Rational(1);
    shift += 1 / t.to_bigfloat();
  }
  if (t == Rational(1)) return shift - bf_euler_gamma();
  // Gauss digamma theorem at t = p/q in lowest terms, 0 < p < q:
  //   psi(p/q) = -gamma - ln(2q) - (pi/2) cot(pi p/q)
  //              + 2 sum_{n=1}^{floor((q-1)/2)} cos(2 pi n p/q) ln sin(pi n/q).
  const Int p = t.num(), q = t.den();
  const BigFloat pi = bf_pi();
  const BigFloat pf = p.convert_to<BigFloat>(), qf = q.convert_to<BigFloat>();
  BigFloat val = -bf_euler_gamma() - log(2 * qf) - pi / 2 * cos(pi * pf / qf) / sin(pi * pf / qf);
  const long half = (q.convert_to<long>() - 1) / 2;
  for (long n = 1; n <= half; ++n)
    val += 2 * cos(2 * pi * n * pf / qf) * log(sin(pi * n / qf));
  return val + shift;
}

BigFloat ti2_value(const Rational& x, unsigned digits) {
  Rational ax = x.abs();
  if (ax > Rational(1)) throw std::domain_error("inverse-tangent integral restricted to |x| <= 1");
  ScopedPrecision sp(digits + 15);
  if (ax == Rational(1)) return x.sign() > 0 ? bf_catalan() : -bf_catalan();
  const BigFloat xf = x.to_bigfloat();
  const BigFloat x2 = xf * xf;
  const BigFloat eps = pow(BigFloat(10), -static_cast<int>(digits) - 8);
  BigFloat s(0), p = xf;
  for (long j = 0;; ++j) {
    const BigFloat term = p / ((2 * j + 1) * (2 * j + 1));
    s += (j % 2 == 0) ? term : -term;
    if (abs(term) < eps) break;
    p *= x2;
    if (j > 100000000) throw std::runtime_error("inverse-tangent series failed to converge");
  }
  return s;
}

}  // namespace

ConstantSymbol ConstantSymbol::zeta(int k) {
  if (k < 2) throw std::invalid_argument("zeta_k requires k >= 2");
  return ConstantSymbol(Kind::zeta_k, k, Rational(0));
}
ConstantSymbol ConstantSymbol::eta(int k) {
  if (k < 1) throw std::invalid_argument("eta_k requires k >= 1");
  return ConstantSymbol(Kind::eta_k, k, Rational(0));
}
ConstantSymbol ConstantSymbol::ln2() { return ConstantSymbol(Kind::log2, 0, Rational(0)); }
ConstantSymbol ConstantSymbol::li_half(int k) {
  if (k < 1) throw std::invalid_argument("Li_k(1/2) requires k >= 1");
  return ConstantSymbol(Kind::li_half_k, k, Rational(0));
}
ConstantSymbol ConstantSymbol::catalan() { return ConstantSymbol(Kind::catalan_c, 0, Rational(0)); }
ConstantSymbol ConstantSymbol::psi(const Rational& x) {
  if (x.sign() <= 0) throw std::invalid_argument("digamma symbol requires x > 0");
  return ConstantSymbol(Kind::psi_x, 0, x);
}
ConstantSymbol ConstantSymbol::ti2(const Rational& x) {
  if (x.abs() > Rational(1)) throw std::invalid_argument("Ti_2 symbol requires |x| <= 1");
  return ConstantSymbol(Kind::ti2_x, 0, x);
}
ConstantSymbol ConstantSymbol::sigma0() { return ConstantSymbol(Kind::sigma_0, 0, Rational(0)); }

std::string ConstantSymbol::name() const {
  switch (kind_) {
    case Kind::zeta_k: return "zeta_" + std::to_string(k_);
    case Kind::eta_k: return "eta_" + std::to_string(k_);
    case Kind::log2: return "ln2";
    case Kind::li_half_k: return "Li_" + std::to_string(k_) + "(1/2)";
    case Kind::catalan_c: return "Catalan";
    case Kind::psi_x: return "psi(" + arg_.str() + ")";
    case Kind::ti2_x: return "Ti_2(" + arg_.str() + ")";
    case Kind::sigma_0: return "sigma_0";
  }
  return "";
}

bool ConstantSymbol::is_divergent() const { return kind_ == Kind::sigma_0; }

BigFloat ConstantSymbol::value(unsigned digits) const {
  switch (kind_) {
    case Kind::zeta_k: return zeta_value(k_, digits);
    case Kind::eta_k: return eta_value(k_, digits);
    case Kind::log2: {
      ScopedPrecision sp(digits + 10);
      return bf_ln2();
    }
    case Kind::li_half_k: return li_half_value(k_, digits);
    case Kind::catalan_c: {
      ScopedPrecision sp(digits + 10);
      return bf_catalan();
    }
    case Kind::psi_x: return psi_value(arg_, digits);
    case Kind::ti2_x: return ti2_value(arg_, digits);
    case Kind::sigma_0: break;
  }
  throw std::domain_error("sigma_0 is a divergence symbol with no finite value");
}

}  // namespace nestsum
