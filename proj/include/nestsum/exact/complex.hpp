#pragma once

#include "nestsum/exact/numbers.hpp"

namespace nestsum {

// Minimal complex type over BigFloat (std::complex is not specified for
// user-defined floats). Only what the analytic continuation needs.
struct Complex {
  BigFloat re, im;

  Complex() : re(0), im(0) {}
  Complex(BigFloat r) : re(std::move(r)), im(0) {}  // NOLINT: implicit by design
  Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_real() const { return im.is_zero(); }

  Complex operator-() const { return {-re, -im}; }
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    BigFloat n = b.re * b.re + b.im * b.im;
    if (n.is_zero()) throw std::domain_error("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

inline BigFloat abs(const Complex& z) {
  using boost::multiprecision::hypot;
  return hypot(z.re, z.im);
}

// Principal branch.
inline Complex log(const Complex& z) {
  if (z.re.is_zero() && z.im.is_zero()) throw std::domain_error("log of zero");
  using boost::multiprecision::atan2;
  using boost::multiprecision::log;
  return {log(abs(z)), atan2(z.im, z.re)};
}

// z^k for integer k (binary powering; k < 0 via reciprocal).
inline Complex pow_int(const Complex& z, long k) {
  if (k == 0) return Complex(BigFloat(1));
  Complex base = k > 0 ? z : Complex(BigFloat(1)) / z;
  unsigned long e = k > 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
  Complex acc(BigFloat(1));
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace nestsum
