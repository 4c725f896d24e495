#include "nestsum/sums/eval.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace nestsum {

namespace {

// Prefix caches: index -> values S_idx(1..n) computed so far. Extending a
// vector never changes earlier entries, so cached prefixes stay valid.
template <typename Index>
class PrefixCache {
 public:
  // Returns S_idx(k) for k = 0..N (entry 0 is the empty-sum value 0).
  std::vector<Rational> values(const Index& idx, long N) {
    std::lock_guard<std::mutex> lock(mutex_);
    return extend(idx, N);
  }

 private:
  std::vector<Rational>& extend(const Index& idx, long N) {
    auto& vals = table_[idx];
    if (idx.entries.empty()) {
      // S_{} = 1 by convention, including at N = 0.
      if (static_cast<long>(vals.size()) <= N)
        vals.assign(static_cast<std::size_t>(N) + 1, Rational(1));
      return vals;
    }
    if (vals.empty()) vals.push_back(Rational(0));
    const long have = static_cast<long>(vals.size()) - 1;
    if (have >= N) return vals;

    Index tail;
    tail.entries.assign(idx.entries.begin() + 1, idx.entries.end());
    const auto& inner = extend(tail, N);

    const auto& head = idx.entries.front();
    Rational acc = vals.back();
    Rational wpow = weight_power_at(head, have);
    vals.reserve(static_cast<std::size_t>(N) + 1);
    for (long k = have + 1; k <= N; ++k) {
      wpow *= weight_base(head);
      acc += wpow * term_denominator(head, k) * inner[static_cast<std::size_t>(k)];
      vals.push_back(acc);
    }
    return vals;
  }

  static Rational weight_base(int a) { return Rational(a < 0 ? -1 : 1); }
  static Rational weight_base(const SEntry& e) { return e.weight; }
  static Rational weight_base(const CycEntry& e) { return e.s; }

  static Rational weight_power_at(int a, long k) {
    return (a < 0 && k % 2 != 0) ? Rational(-1) : Rational(1);
  }
  static Rational weight_power_at(const SEntry& e, long k) { return e.weight.pow(k); }
  static Rational weight_power_at(const CycEntry& e, long k) { return e.s.pow(k); }

  static Rational term_denominator(int a, long k) {
    return Rational(Int(k)).pow(a < 0 ? a : -a);
  }
  static Rational term_denominator(const SEntry& e, long k) {
    return Rational(Int(k)).pow(-e.exponent);
  }
  static Rational term_denominator(const CycEntry& e, long k) {
    return Rational(Int(e.a) * k + e.b).pow(-e.c);
  }

  std::map<Index, std::vector<Rational>> table_;
  std::mutex mutex_;
};

PrefixCache<HarmonicIndex> g_harmonic;
PrefixCache<GeneralIndex> g_general;
PrefixCache<CyclotomicIndex> g_cyclotomic;

void require_nonneg(long N) {
  if (N < 0) throw std::domain_error("summation limit must be nonnegative");
}

}  // namespace

Rational eval_harmonic(const HarmonicIndex& idx, long N) {
  require_nonneg(N);
  return g_harmonic.values(idx, N)[static_cast<std::size_t>(N)];
}

Rational eval_ssum(const GeneralIndex& idx, long N) {
  require_nonneg(N);
  return g_general.values(idx, N)[static_cast<std::size_t>(N)];
}

Rational eval_cyclotomic(const CyclotomicIndex& idx, long N) {
  require_nonneg(N);
  return g_cyclotomic.values(idx, N)[static_cast<std::size_t>(N)];
}

Rational eval_cyclotomic_single(long l, long m, int n, long N) {
  require_nonneg(N);
  if (!(l > m && m >= 1)) throw std::invalid_argument("single cyclotomic sum requires l > m >= 1");
  if (n == 0) throw std::invalid_argument("exponent must be nonzero");
  const int mag = n < 0 ? -n : n;
  Rational acc(0);
  for (long k = 0; k <= N; ++k) {
    Rational term = Rational(Int(l) * k + m).pow(-mag);
    if (n < 0 && k % 2 != 0) term = -term;
    acc += term;
  }
  return acc;
}

bool duplication_check(int a, long N) {
  if (a == 0) throw std::invalid_argument("index must be nonzero");
  if (N < 1) throw std::domain_error("duplication check requires N >= 1");
  const int m = a < 0 ? -a : a;
  Rational lhs = eval_harmonic(HarmonicIndex{m}, 2 * N) + eval_harmonic(HarmonicIndex{-m}, 2 * N);
  Rational rhs = Rational(2).pow(1 - m) * eval_harmonic(HarmonicIndex{m}, N);
  return lhs == rhs;
}

}  // namespace nestsum
