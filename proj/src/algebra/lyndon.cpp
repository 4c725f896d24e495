#include "nestsum/algebra/lyndon.hpp"

#include <stdexcept>

namespace nestsum {

namespace {

void enumerate(int remaining, std::vector<int>& prefix, std::vector<HarmonicIndex>& out) {
  if (remaining == 0) {
    out.push_back(HarmonicIndex(prefix));
    return;
  }
  for (int m = 1; m <= remaining; ++m) {
    for (int s : {+1, -1}) {
      prefix.push_back(s * m);
      enumerate(remaining - m, prefix, out);
      prefix.pop_back();
    }
  }
}

bool word_less(const HarmonicIndex& a, const HarmonicIndex& b) {
  return std::lexicographical_compare(a.entries.begin(), a.entries.end(),
                                      b.entries.begin(), b.entries.end(),
                                      HarmonicLetterLess{});
}

}  // namespace

std::vector<HarmonicIndex> lyndon_words(int weight) {
  if (weight < 1) throw std::invalid_argument("weight must be positive");
  std::vector<HarmonicIndex> all;
  std::vector<int> prefix;
  enumerate(weight, prefix, all);
  std::vector<HarmonicIndex> out;
  for (auto& w : all)
    if (is_lyndon(w)) out.push_back(std::move(w));
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

}  // namespace nestsum
