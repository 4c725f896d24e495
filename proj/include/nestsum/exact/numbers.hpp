#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace nestsum {

// Arbitrary-precision signed integer (GMP-backed).
using Int = boost::multiprecision::mpz_int;

// Arbitrary-precision real with runtime-variable precision (MPFR-backed).
// The working precision is the thread default; scope it with ScopedPrecision.
using BigFloat = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultDigits = 50;

// Sets the default BigFloat precision (decimal digits) for the enclosing
// scope and restores the previous value on destruction.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits)
      : saved_(BigFloat::default_precision()) {
    if (digits == 0) throw std::invalid_argument("precision must be positive");
    BigFloat::default_precision(digits);
  }
  ~ScopedPrecision() { BigFloat::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

// Exact rational number, always in lowest terms with positive denominator.
// Every constructor canonicalizes; arithmetic preserves the invariant.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(const Int& n) : q_(n) {}
  Rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = Q(num) / Q(den);
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  // Parses "n" or "n/d" (optional leading '-'); throws std::invalid_argument.
  explicit Rational(const std::string& s);

  const Int num() const { return Int(numerator(q_)); }
  const Int den() const { return Int(denominator(q_)); }

  bool is_zero() const { return q_.is_zero(); }
  bool is_integer() const { return denominator(q_) == 1; }
  int sign() const { return q_.sign(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.q_ = -q_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  // Exact integer power; e < 0 requires a nonzero value.
  Rational pow(long e) const;

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // "n" for integers, "n/d" otherwise.
  std::string str() const;

  // Conversion at the current working precision.
  BigFloat to_bigfloat() const { return BigFloat(q_); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  using Q = boost::multiprecision::mpq_rational;
  Q q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// MPFR-native constants at the current working precision.
BigFloat bf_pi();
BigFloat bf_ln2();
BigFloat bf_euler_gamma();
BigFloat bf_catalan();

// abs for BigFloat spelled consistently with Rational::abs.
inline BigFloat bf_abs(const BigFloat& x) { return boost::multiprecision::abs(x); }

// Deterministic decimal rendering with the given significant digits.
std::string bf_str(const BigFloat& v, unsigned digits);

}  // namespace nestsum
