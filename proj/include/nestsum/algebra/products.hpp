#pragma once

#include <cstddef>
#include <vector>

#include "nestsum/algebra/lincomb.hpp"
#include "nestsum/algebra/words.hpp"

namespace nestsum {

// Quasi-shuffle product on nested-sum indices. Because the inner sums here
// run over k <= N rather than k < N, the diagonal (merged-letter) term enters
// with a minus sign:
//   (a u) * (b v) = a (u * b v) + b (a u * v) - (a.b) (u * v).
// Expanding S_u S_v along this recursion expresses the product as an integer
// combination of single sums.
LinComb<HarmonicIndex> stuffle(const HarmonicIndex& u, const HarmonicIndex& v);
LinComb<GeneralIndex> stuffle(const GeneralIndex& u, const GeneralIndex& v);

namespace detail {

template <typename L, typename MergeFn>
LinComb<std::vector<L>> stuffle_words(const std::vector<L>& u, const std::vector<L>& v,
                                      std::size_t iu, std::size_t iv, const MergeFn& merge) {
  using Word = std::vector<L>;
  LinComb<Word> out;
  if (iu == u.size()) {
    out.add(Word(v.begin() + iv, v.end()), Rational(1));
    return out;
  }
  if (iv == v.size()) {
    out.add(Word(u.begin() + iu, u.end()), Rational(1));
    return out;
  }
  auto prepend_all = [&out](const L& head, const LinComb<Word>& sub, int scale) {
    for (const auto& [w, c] : sub.terms()) {
      Word nw;
      nw.reserve(w.size() + 1);
      nw.push_back(head);
      nw.insert(nw.end(), w.begin(), w.end());
      out.add(std::move(nw), c * Rational(scale));
    }
  };
  prepend_all(u[iu], stuffle_words(u, v, iu + 1, iv, merge), 1);
  prepend_all(v[iv], stuffle_words(u, v, iu, iv + 1, merge), 1);
  prepend_all(merge(u[iu], v[iv]), stuffle_words(u, v, iu + 1, iv + 1, merge), -1);
  return out;
}

}  // namespace detail

// Ordinary shuffle product on words over any letter type: all interleavings
// of u and v that keep the internal order of each factor.
template <typename L>
LinComb<std::vector<L>> shuffle(const std::vector<L>& u, const std::vector<L>& v) {
  using Word = std::vector<L>;
  struct Rec {
    const Word& u;
    const Word& v;
    LinComb<Word> run(std::size_t iu, std::size_t iv) {
      LinComb<Word> out;
      if (iu == u.size()) {
        out.add(Word(v.begin() + iv, v.end()), Rational(1));
        return out;
      }
      if (iv == v.size()) {
        out.add(Word(u.begin() + iu, u.end()), Rational(1));
        return out;
      }
      auto prepend_all = [&out](const L& head, const LinComb<Word>& sub) {
        for (const auto& [w, c] : sub.terms()) {
          Word nw;
          nw.reserve(w.size() + 1);
          nw.push_back(head);
          nw.insert(nw.end(), w.begin(), w.end());
          out.add(std::move(nw), c);
        }
      };
      prepend_all(u[iu], run(iu + 1, iv));
      prepend_all(v[iv], run(iu, iv + 1));
      return out;
    }
  };
  return Rec{u, v}.run(0, 0);
}

}  // namespace nestsum
