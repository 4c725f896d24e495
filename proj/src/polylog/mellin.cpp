#include "nestsum/polylog/mellin.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nestsum/polylog/engine.hpp"
#include "nestsum/polylog/hpl.hpp"
#include "nestsum/sums/constants.hpp"
#include "nestsum/sums/eval.hpp"

namespace nestsum {
namespace {

// Depth J of the dyadic grading: the two closure slivers have width 2^-J and
// a second-order midpoint error ~ 4^-J times a slowly growing ln-power
// factor, so pick the smallest J with 4^-J (0.7 J + 1)^2 below tol / 8.
int dyadic_depth(const BigFloat& tol) {
  const double t = tol.convert_to<double>();
  for (int J = 8; J <= 60; ++J) {
    if (std::pow(4.0, -J) * std::pow(0.7 * J + 1, 2) < t / 8) return J;
  }
  return 60;
}

BigFloat mellin_quadrature(const quad::Fn& g, const BigFloat& tol) {
  const int J = dyadic_depth(tol);
  const BigFloat seg_tau = tol * BigFloat("1e-3");
  std::vector<BigFloat> cuts;
  cuts.reserve(static_cast<std::size_t>(2 * J));
  for (int j = J; j >= 1; --j) cuts.push_back(pow(BigFloat(2), -j));
  for (int j = 2; j <= J; ++j) cuts.push_back(1 - pow(BigFloat(2), -j));
  const BigFloat sliver = pow(BigFloat(2), -J);
  BigFloat total = g(sliver / 2) * sliver + g(1 - sliver / 2) * sliver;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += quad::integrate(g, cuts[i], cuts[i + 1], {}, seg_tau);
  return total;
}

void validate_word_for_moment(const PolyLogWord& w) {
  for (const auto& l : w.letters()) {
    if (l.kind() == PolyLetter::Kind::sqrt_form)
      throw std::domain_error("moments take ordinary words, not sqrt-form letters");
    if (l.interior_pole())
      throw std::domain_error("kernel pole inside (0,1) makes the moment divergent");
  }
}

}  // namespace

BigFloat mellin_moment(const MellinIntegrand& f, long N, const BigFloat& tol) {
  if (N < 0) throw std::domain_error("moment order must be nonnegative");
  if (f.x_power < 0) throw std::domain_error("x_power must be nonnegative");
  if (f.word) validate_word_for_moment(*f.word);
  ScopedPrecision sp(detail::work_digits(tol) + 8);
  const BigFloat word_tau = detail::tail_target(tol) * BigFloat("1e-2");
  const unsigned p = static_cast<unsigned>(N) + static_cast<unsigned>(f.x_power);
  const std::optional<PolyLogWord> w = f.word;
  const bool div = f.over_one_plus_x;
  quad::Fn g = [p, w, div, word_tau](const BigFloat& x) {
    BigFloat v = p == 0 ? BigFloat(1) : pow(x, p);
    if (w) v *= detail::eval_word(*w, x, word_tau);
    if (div) v /= 1 + x;
    return v;
  };
  return mellin_quadrature(g, tol);
}

BigFloat mellin_moment(const std::function<BigFloat(const BigFloat&)>& f, long N,
                       const BigFloat& tol) {
  if (N < 0) throw std::domain_error("moment order must be nonnegative");
  ScopedPrecision sp(detail::work_digits(tol) + 8);
  const unsigned p = static_cast<unsigned>(N);
  quad::Fn g = [p, &f](const BigFloat& x) {
    return (p == 0 ? BigFloat(1) : pow(x, p)) * f(x);
  };
  return mellin_quadrature(g, tol);
}

bool verify_mellin_identity(long N, const BigFloat& tol) {
  if (N < 1 || N > 8) throw std::domain_error("verify_mellin_identity takes 1 <= N <= 8");
  const unsigned digits = 36;
  ScopedPrecision sp(digits);
  const BigFloat qtol("1e-11");
  const BigFloat m1 =
      mellin_moment(MellinIntegrand{0, PolyLogWord::harmonic({0, 1, 1}), true}, N, qtol);
  const BigFloat m2 = mellin_moment(MellinIntegrand{0, std::nullopt, true}, N, qtol);
  const BigFloat lhs = eval_harmonic(HarmonicIndex{-2, 1, 1}, N).to_bigfloat();
  const int sgn = N % 2 == 0 ? 1 : -1;
  const BigFloat z2 = ConstantSymbol::zeta(2).value(digits);
  const BigFloat z3 = ConstantSymbol::zeta(3).value(digits);
  const BigFloat li4h = ConstantSymbol::li_half(4).value(digits);
  const BigFloat l2 = bf_ln2();
  const BigFloat cblock =
      -li4h - pow(l2, 4) / 24 + l2 * l2 * z2 / 4 - 7 * l2 * z3 / 8 + z2 * z2 / 8;
  const BigFloat rhs = -sgn * m1 + sgn * z3 * m2 + cblock;
  return bf_abs(lhs - rhs) <= tol;
}

}  // namespace nestsum
