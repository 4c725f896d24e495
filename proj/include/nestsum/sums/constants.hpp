#pragma once

#include <string>

#include "nestsum/exact/numbers.hpp"

namespace nestsum {

// A symbolic special constant with a high-precision evaluator. sigma_0, the
// divergence symbol for the harmonic series, carries no finite value and its
// value() throws; everything else evaluates to `digits` correct digits.
class ConstantSymbol {
 public:
  static ConstantSymbol zeta(int k);            // zeta_k, k >= 2
  static ConstantSymbol eta(int k);             // eta_k, k >= 1 (eta_1 = ln 2)
  static ConstantSymbol ln2();
  static ConstantSymbol li_half(int k);         // Li_k(1/2), k >= 1
  static ConstantSymbol catalan();
  static ConstantSymbol psi(const Rational& x); // digamma at rational x > 0
  static ConstantSymbol ti2(const Rational& x); // inverse-tangent integral, |x| <= 1
  static ConstantSymbol sigma0();

  std::string name() const;
  bool is_divergent() const;
  BigFloat value(unsigned digits = kDefaultDigits) const;

 private:
  enum class Kind { zeta_k, eta_k, log2, li_half_k, catalan_c, psi_x, ti2_x, sigma_0 };
  ConstantSymbol(Kind kind, int k, Rational arg) : kind_(kind), k_(k), arg_(std::move(arg)) {}

  Kind kind_;
  int k_;
  Rational arg_;
};

}  // namespace nestsum
