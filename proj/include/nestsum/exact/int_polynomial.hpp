#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "nestsum/exact/numbers.hpp"

namespace nestsum {

// Dense univariate polynomial with exact integer coefficients, stored in
// ascending degree order with no trailing zero coefficient.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  // x^n with unit coefficient.
  static IntPolynomial monomial(int n, const Int& c = 1);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // Coefficient of x^k; zero outside the stored range.
  Int coeff(int k) const;
  const std::vector<Int>& coeffs() const { return c_; }

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;

  // Exact division; throws std::domain_error if the remainder is nonzero or
  // the divisor is zero.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  Int eval(const Int& x) const;
  Rational eval(const Rational& x) const;
  BigFloat eval(const BigFloat& x) const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

  // Human-readable form, e.g. "x^2 - x + 1".
  std::string str(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Int> c_;
};

}  // namespace nestsum
