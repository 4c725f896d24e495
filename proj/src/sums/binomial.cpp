#include "nestsum/sums/binomial.hpp"

#include <stdexcept>

#include "nestsum/exact/number_theory.hpp"
#include "nestsum/sums/eval.hpp"

namespace nestsum {

void BinomialSumSpec::validate() const {
  if (levels.empty()) throw std::invalid_argument("binomial sum needs at least one level");
  for (const auto& lv : levels) {
    if (lv.base.is_zero()) throw std::invalid_argument("level base must be nonzero");
    const bool has_denom = lv.denom_a != 0 || lv.denom_b != 0;
    if (has_denom) {
      if (lv.denom_power < 1) throw std::invalid_argument("denominator power must be positive");
      // a*i + b stays positive for all i >= 1 iff a >= 0 and a + b >= 1.
      if (lv.denom_a < 0 || lv.denom_a + lv.denom_b < 1)
        throw std::invalid_argument("denominator form must be positive for i >= 1");
    }
  }
}

Rational eval_binomial_nested(const BinomialSumSpec& spec, long N) {
  spec.validate();
  if (N < 0) throw std::domain_error("summation limit must be nonnegative");

  auto factor = [](const BinomialLevel& lv, long i) {
    Rational f = lv.prefactor * lv.base.pow(i);
    if (lv.binom == BinomialLevel::Binom::numerator)
      f *= Rational(binomial(2 * i, i));
    else if (lv.binom == BinomialLevel::Binom::denominator)
      f /= Rational(binomial(2 * i, i));
    if (lv.denom_a != 0 || lv.denom_b != 0)
      f *= Rational(Int(lv.denom_a) * i + lv.denom_b).pow(-lv.denom_power);
    return f;
  };

  // cur[i] = value of the subtree from this level inward, summed to i.
  std::vector<Rational> cur(static_cast<std::size_t>(N) + 1);
  for (long i = 0; i <= N; ++i) cur[static_cast<std::size_t>(i)] = eval_ssum(spec.inner, i);
  for (auto lv = spec.levels.rbegin(); lv != spec.levels.rend(); ++lv) {
    std::vector<Rational> next(static_cast<std::size_t>(N) + 1, Rational(0));
    Rational acc(0);
    for (long i = 1; i <= N; ++i) {
      acc += factor(*lv, i) * cur[static_cast<std::size_t>(i)];
      next[static_cast<std::size_t>(i)] = acc;
    }
    cur = std::move(next);
  }
  return cur[static_cast<std::size_t>(N)];
}

}  // namespace nestsum
