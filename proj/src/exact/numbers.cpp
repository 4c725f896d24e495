#include "nestsum/exact/numbers.hpp"

#include <cctype>
#include <ostream>

namespace nestsum {

namespace {

bool valid_int_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational::Rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int_token(s)) throw std::invalid_argument("bad rational literal: " + s);
    q_ = Q(Int(s));
    return;
  }
  std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
  if (!valid_int_token(ns) || !valid_int_token(ds))
    throw std::invalid_argument("bad rational literal: " + s);
  Int d(ds);
  if (d == 0) throw std::domain_error("rational with zero denominator");
  q_ = Q(Int(ns)) / Q(d);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero() && e < 0) throw std::domain_error("zero to a negative power");
  Rational base = e > 0 ? *this : Rational(1) / *this;
  unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  Rational acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::string Rational::str() const {
  std::string out = num().str();
  if (!is_integer()) out += "/" + den().str();
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {
BigFloat mpfr_const(int (*fn)(mpfr_t, mpfr_rnd_t)) {
  BigFloat v;
  fn(v.backend().data(), MPFR_RNDN);
  return v;
}
}  // namespace

BigFloat bf_pi() { return mpfr_const(mpfr_const_pi); }
BigFloat bf_ln2() { return mpfr_const(mpfr_const_log2); }
BigFloat bf_euler_gamma() { return mpfr_const(mpfr_const_euler); }
BigFloat bf_catalan() { return mpfr_const(mpfr_const_catalan); }

std::string bf_str(const BigFloat& v, unsigned digits) { return v.str(digits); }

}  // namespace nestsum
