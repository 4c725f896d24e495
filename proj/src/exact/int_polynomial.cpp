#include "nestsum/exact/int_polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace nestsum {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  c_.assign(coeffs.begin(), coeffs.end());
  normalize();
}

IntPolynomial IntPolynomial::monomial(int n, const Int& c) {
  IntPolynomial p;
  if (c == 0 || n < 0) return p;
  p.c_.assign(static_cast<std::size_t>(n) + 1, Int(0));
  p.c_.back() = c;
  return p;
}

void IntPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Int(0);
  return c_[static_cast<std::size_t>(k)];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.normalize();
  return r;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  IntPolynomial rem = *this, quot;
  if (degree() < divisor.degree()) {
    if (!is_zero()) throw std::domain_error("polynomial division is not exact");
    return quot;
  }
  quot.c_.assign(static_cast<std::size_t>(degree() - divisor.degree()) + 1, Int(0));
  const Int& lead = divisor.c_.back();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    Int q = rem.c_.back() / lead;
    if (q * lead != rem.c_.back()) throw std::domain_error("polynomial division is not exact");
    int shift = rem.degree() - divisor.degree();
    quot.c_[static_cast<std::size_t>(shift)] = q;
    for (std::size_t i = 0; i < divisor.c_.size(); ++i)
      rem.c_[i + static_cast<std::size_t>(shift)] -= q * divisor.c_[i];
    rem.normalize();
  }
  if (!rem.is_zero()) throw std::domain_error("polynomial division is not exact");
  quot.normalize();
  return quot;
}

namespace {
template <typename T>
T horner(const std::vector<Int>& c, const T& x) {
  T acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + T(*it);
  return acc;
}
}  // namespace

Int IntPolynomial::eval(const Int& x) const { return horner<Int>(c_, x); }
Rational IntPolynomial::eval(const Rational& x) const { return horner<Rational>(c_, x); }
BigFloat IntPolynomial::eval(const BigFloat& x) const { return horner<BigFloat>(c_, x); }

std::string IntPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Int c = coeff(k);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = boost::multiprecision::abs(c);
    if (a != 1 || k == 0) os << a.str();
    if (k > 0) {
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace nestsum
