#include "nestsum/algebra/counting.hpp"

#include <stdexcept>

#include "nestsum/exact/number_theory.hpp"

namespace nestsum {

namespace {

Int int_pow(long base, int exp) {
  Int out(1), b(base);
  for (int i = 0; i < exp; ++i) out *= b;
  return out;
}

// Mobius-weighted sum over divisors, divided exactly by w.
template <typename TermFn>
Int witt_sum(int w, const TermFn& term) {
  Int acc(0);
  for (int d = 1; d <= w; ++d) {
    if (w % d != 0) continue;
    acc += Int(mobius(w / d)) * term(d);
  }
  if (acc % w != 0) throw std::logic_error("witt sum not divisible by weight");
  return acc / w;
}

}  // namespace

Int count_all(int w) {
  if (w < 1) throw std::invalid_argument("count_all requires w >= 1");
  return 2 * int_pow(3, w - 1);
}

Int count_A(int w) {
  if (w < 1) throw std::invalid_argument("count_A requires w >= 1");
  return witt_sum(w, [](int d) { return int_pow(3, d) - 1; });
}

Int count_D(int w) {
  if (w < 2) throw std::invalid_argument("count_D requires w >= 2");
  return 4 * int_pow(3, w - 2);
}

Int count_H(int w) {
  if (w < 1) throw std::invalid_argument("count_H requires w >= 1");
  return 2 * int_pow(3, w - 1) - int_pow(2, w - 1);
}

Int count_ADH(int w) {
  if (w < 2) throw std::invalid_argument("count_ADH requires w >= 2");
  auto t = [](int m) { return witt_sum(m, [](int d) { return int_pow(3, d) - int_pow(2, d); }); };
  return t(w) - t(w - 1);
}

}  // namespace nestsum
