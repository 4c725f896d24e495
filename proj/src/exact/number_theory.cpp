#include "nestsum/exact/number_theory.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace nestsum {

namespace {

void check_positive(long n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " requires n >= 1");
}

// Prime factorization by trial division; adequate for the supported ranges.
std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> f;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      f.emplace_back(p, e);
    }
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

}  // namespace

int mobius(long n) {
  check_positive(n, "mobius");
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

Int totient(long n) {
  check_positive(n, "totient");
  Int r(n);
  for (const auto& [p, e] : factorize(n)) {
    r /= p;
    r *= p - 1;
  }
  return r;
}

const IntPolynomial& cyclotomic_poly(long n) {
  check_positive(n, "cyclotomic_poly");
  static std::map<long, IntPolynomial> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Fill ascending so every strict divisor is present before it is needed.
  for (long m = 1; m <= n; ++m) {
    if (n % m != 0 || cache.count(m)) continue;
    IntPolynomial num = IntPolynomial::monomial(static_cast<int>(m)) - IntPolynomial({1});
    IntPolynomial den({1});
    for (long d = 1; d < m; ++d)
      if (m % d == 0) den = den * cache.at(d);
    cache.emplace(m, num.divide_exact(den));
  }
  return cache.at(n);
}

Int binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial requires n >= 0");
  if (k < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.backend().data(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Rational bernoulli(long n) {
  if (n < 0) throw std::invalid_argument("bernoulli requires n >= 0");
  static std::vector<Rational> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
  for (long m = static_cast<long>(cache.size()); m <= n; ++m) {
    if (m == 0) {
      cache.emplace_back(1);
      continue;
    }
    Rational acc(0);
    for (long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * cache[static_cast<std::size_t>(j)];
    cache.push_back(-acc / Rational(Int(m + 1)));
  }
  return cache[static_cast<std::size_t>(n)];
}

}  // namespace nestsum
