#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "nestsum/algebra/words.hpp"

namespace nestsum {

// A word is Lyndon when it is nonempty and strictly smaller, in the given
// letter order, than every proper rotation of itself.
template <typename L, typename Less>
bool is_lyndon(const std::vector<L>& w, const Less& less) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  auto at = [&](std::size_t r, std::size_t i) { return w[(r + i) % n]; };
  for (std::size_t r = 1; r < n; ++r) {
    bool smaller = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (less(w[i], at(r, i))) {
        smaller = true;
        break;
      }
      if (less(at(r, i), w[i])) break;
    }
    if (!smaller) return false;  // rotation <= w, including the periodic case
  }
  return true;
}

inline bool is_lyndon(const HarmonicIndex& w) {
  return is_lyndon(w.entries, HarmonicLetterLess{});
}

// All Lyndon words over the signed-integer alphabet whose entry magnitudes
// total `weight`, sorted lexicographically in the order 1 < -1 < 2 < -2 < ...
std::vector<HarmonicIndex> lyndon_words(int weight);

// Chen-Fox-Lyndon factorization: every word splits uniquely into a
// concatenation of Lyndon factors that are nonincreasing left to right.
// Duval's algorithm, linear time.
template <typename L, typename Less>
std::vector<std::vector<L>> chen_fox_lyndon(const std::vector<L>& w, const Less& less) {
  std::vector<std::vector<L>> factors;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && !less(w[j], w[k])) {
      if (less(w[k], w[j]))
        k = i;
      else
        ++k;
      ++j;
    }
    const std::size_t len = j - k;
    while (i <= k) {
      factors.emplace_back(w.begin() + i, w.begin() + i + len);
      i += len;
    }
  }
  return factors;
}

inline std::vector<HarmonicIndex> chen_fox_lyndon(const HarmonicIndex& w) {
  std::vector<HarmonicIndex> out;
  for (auto& f : chen_fox_lyndon(w.entries, HarmonicLetterLess{}))
    out.push_back(HarmonicIndex(std::move(f)));
  return out;
}

}  // namespace nestsum
