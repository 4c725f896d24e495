#include "nestsum/algebra/basis.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "nestsum/algebra/lyndon.hpp"
#include "nestsum/algebra/products.hpp"

namespace nestsum {

namespace {

std::map<HarmonicIndex, BasisPolynomial> g_cache;
std::mutex g_cache_mutex;

BasisPolynomial cached(const HarmonicIndex& w) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto it = g_cache.find(w);
  return it == g_cache.end() ? BasisPolynomial{} : it->second;
}

void store(const HarmonicIndex& w, const BasisPolynomial& p) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.emplace(w, p);
}

BasisPolynomial reduce_impl(const HarmonicIndex& word, int depth) {
  if (depth > 1000) throw std::logic_error("basis reduction failed to terminate");
  if (word.empty()) return BasisPolynomial::single(BasisMonomial{});
  if (is_lyndon(word)) return BasisPolynomial::single(BasisMonomial{word});

  if (auto hit = cached(word); !hit.empty()) return hit;

  auto factors = chen_fox_lyndon(word);
  const HarmonicIndex& l1 = factors.front();
  std::vector<int> rest_entries;
  for (std::size_t i = 1; i < factors.size(); ++i)
    rest_entries.insert(rest_entries.end(), factors[i].entries.begin(), factors[i].entries.end());
  HarmonicIndex rest(std::move(rest_entries));

  LinComb<HarmonicIndex> prod = stuffle(l1, rest);
  Rational q = prod.coeff(word);
  if (!q.is_integer() || q.sign() <= 0)
    throw std::logic_error("quasi-shuffle expansion missing the full concatenation");

  BasisPolynomial acc = basis_mul(reduce_impl(l1, depth + 1), reduce_impl(rest, depth + 1));
  for (const auto& [u, c] : prod.terms()) {
    if (u == word) continue;
    acc -= c * reduce_impl(u, depth + 1);
  }
  acc *= Rational(1) / q;

  store(word, acc);
  return acc;
}

}  // namespace

BasisPolynomial basis_mul(const BasisPolynomial& a, const BasisPolynomial& b) {
  BasisPolynomial out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      BasisMonomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add(std::move(m), ca * cb);
    }
  }
  return out;
}

BasisPolynomial reduce_to_basis(const HarmonicIndex& idx, int max_weight) {
  if (idx.weight() > max_weight)
    throw std::invalid_argument("index weight exceeds configured reduction maximum");
  return reduce_impl(idx, 0);
}

}  // namespace nestsum
