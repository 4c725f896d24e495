#include "nestsum/algebra/products.hpp"

namespace nestsum {

namespace {

// Merged harmonic letter: exponents add, alternation signs multiply.
int merge_harmonic(int a, int b) {
  int mag = std::abs(a) + std::abs(b);
  return (a > 0) == (b > 0) ? mag : -mag;
}

SEntry merge_general(const SEntry& a, const SEntry& b) {
  return {a.exponent + b.exponent, a.weight * b.weight};
}

template <typename Index, typename L, typename MergeFn>
LinComb<Index> lift(const std::vector<L>& u, const std::vector<L>& v, const MergeFn& merge) {
  LinComb<Index> out;
  const auto words = detail::stuffle_words(u, v, 0, 0, merge);
  for (const auto& [w, c] : words.terms()) out.add(Index(w), c);
  return out;
}

}  // namespace

LinComb<HarmonicIndex> stuffle(const HarmonicIndex& u, const HarmonicIndex& v) {
  return lift<HarmonicIndex>(u.entries, v.entries, merge_harmonic);
}

LinComb<GeneralIndex> stuffle(const GeneralIndex& u, const GeneralIndex& v) {
  return lift<GeneralIndex>(u.entries, v.entries, merge_general);
}

}  // namespace nestsum
