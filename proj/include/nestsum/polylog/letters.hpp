#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nestsum/exact/numbers.hpp"

namespace nestsum {

// One integration kernel of an iterated integral. Three families:
//   root b:      1/(y - b), except b = 1 which is taken as 1/(1 - y) so that
//                H_1(x) = -ln(1-x) and H_{0,1} = Li_2 (the standard sign);
//   cyclotomic:  y^l / Phi_k(y) with 0 <= l < phi(k), Phi_k the k-th
//                cyclotomic polynomial;
//   sqrt-form:   the [x,1]-integral weights
//                w12 = 1/sqrt(y(8-y)),  w13 = 1/((2-y) sqrt(y(8-y))),
//                w17 = 1/sqrt(y(8+y)),  w18 = 1/((2+y) sqrt(y(8+y))).
class PolyLetter {
 public:
  enum class Kind { root, cyclotomic, sqrt_form };
  enum class Sqrt { w12, w13, w17, w18 };

  // Root letter for b in {0, 1, -1}; the classic harmonic alphabet.
  static PolyLetter harmonic(int b);
  static PolyLetter root(Rational b);
  // Throws std::domain_error unless k >= 1 and 0 <= l < phi(k).
  static PolyLetter cyclotomic(long k, long l);
  static PolyLetter sqrt_form(Sqrt s);

  Kind kind() const { return kind_; }
  const Rational& root_value() const;
  long cyc_k() const;
  long cyc_l() const;
  Sqrt sqrt_kind() const;

  // Kernel value at y; the caller keeps y away from the singular points.
  BigFloat value(const BigFloat& y) const;

  // Kernel has a pole at y = 1 (root b = 1 and the cyclotomic letter (1,0)).
  bool singular_at_one() const;
  // Kernel pole strictly inside (0,1), if any (root letters with 0 < b < 1).
  std::optional<Rational> interior_pole() const;

  // The harmonic tag 0/1/-1 when this is a root letter with that value.
  std::optional<int> as_harmonic() const;
  bool is_root_zero() const;
  bool is_root_one() const;

  std::string str() const;

  friend bool operator==(const PolyLetter& a, const PolyLetter& b);
  friend bool operator<(const PolyLetter& a, const PolyLetter& b);

 private:
  PolyLetter() = default;
  Kind kind_ = Kind::root;
  Rational b_;
  long k_ = 0, l_ = 0;
  Sqrt s_ = Sqrt::w12;
};

// Iterated-integral word, outermost letter first; the empty word is the
// constant 1. Weight equals the letter count.
class PolyLogWord {
 public:
  PolyLogWord() = default;
  explicit PolyLogWord(std::vector<PolyLetter> letters) : letters_(std::move(letters)) {}
  // Word over the harmonic alphabet, entries in {0, 1, -1}.
  static PolyLogWord harmonic(const std::vector<int>& bs);

  const std::vector<PolyLetter>& letters() const { return letters_; }
  int weight() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  bool all_harmonic() const;
  // Length of the run of root-0 letters at the inner (last) end.
  int trailing_zeros() const;

  std::string str() const;

  friend bool operator==(const PolyLogWord& a, const PolyLogWord& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator<(const PolyLogWord& a, const PolyLogWord& b);

 private:
  std::vector<PolyLetter> letters_;
};

}  // namespace nestsum
