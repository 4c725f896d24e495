#include "nestsum/sums/limits.hpp"

#include <cmath>
#include <stdexcept>

#include "nestsum/exact/number_theory.hpp"

namespace nestsum {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::log;
using boost::multiprecision::pow;

// Online evaluator of all suffix partial sums: after advance_to(k),
// suffix(0) equals S_idx(k). O(depth) big-float operations per step.
class Ladder {
 public:
  explicit Ladder(const GeneralIndex& idx) : idx_(idx) {
    const std::size_t d = idx.entries.size();
    acc_.assign(d + 1, BigFloat(0));
    acc_[d] = 1;  // empty suffix
    wpow_.assign(d, BigFloat(1));
    for (std::size_t i = 0; i < d; ++i) wbase_.push_back(idx.entries[i].weight.to_bigfloat());
  }

  void advance_to(long target) {
    const std::size_t d = idx_.entries.size();
    for (long k = k_ + 1; k <= target; ++k) {
      const BigFloat kb(k);
      for (std::size_t i = d; i-- > 0;) {
        wpow_[i] *= wbase_[i];
        acc_[i] += wpow_[i] / pow(kb, idx_.entries[i].exponent) * acc_[i + 1];
      }
    }
    k_ = target;
  }

  const BigFloat& outer() const { return acc_[0]; }
  long position() const { return k_; }

 private:
  GeneralIndex idx_;
  std::vector<BigFloat> acc_, wpow_, wbase_;
  long k_ = 0;
};

// Direct summation for |outer weight| < 1: choose K so the geometric tail,
// padded for the polylogarithmic growth of inner sums, is below eps.
LimitResult direct_limit(const GeneralIndex& idx, unsigned digits) {
  const double ax = std::fabs(idx.entries.front().weight.to_bigfloat().convert_to<double>());
  const double need = (static_cast<double>(digits) + 8) * std::log(10.0);
  long K = 64;
  const double d = static_cast<double>(idx.entries.size());
  while (K < (1L << 22) &&
         -std::log(ax) * K - d * std::log(std::log(K + 2.0) + 2.0) + std::log(1 - ax) < need)
    K *= 2;

  Ladder lad(idx);
  lad.advance_to(K - 1);
  BigFloat prev = lad.outer();
  lad.advance_to(K);

  LimitResult out;
  out.kind = LimitResult::Kind::converged;
  out.value = lad.outer();
  out.iterates = {prev, lad.outer()};
  out.note = "direct summation, " + std::to_string(K) + " terms";
  return out;
}

// Acceleration for outer weight +-1. Partial sums behave like
//   S(N) = sigma + sum_j P_j(ln N)/N^j + (-1)^N Q(N)
// with smooth Q. Binomial smoothing over r+1 consecutive values damps the
// oscillating part by ~ (r/N)^r; a Richardson ladder on the doubling grid
// then removes the 1/N^j terms, repeating each power to absorb ln N factors.
LimitResult richardson_limit(const GeneralIndex& idx, unsigned digits) {
  constexpr long kN0 = 20;
  constexpr int kSmooth = 8;
  constexpr int kJMax = 13;
  const int rep = static_cast<int>(idx.entries.size()) + 1;
  const BigFloat stop_eps = pow(BigFloat(10), -static_cast<int>(digits) - 2);

  std::vector<Int> smooth_w;
  for (int i = 0; i <= kSmooth; ++i) smooth_w.push_back(binomial(kSmooth, i));
  const BigFloat smooth_scale = pow(BigFloat(2), kSmooth);

  Ladder lad(idx);
  std::vector<BigFloat> smoothed;
  LimitResult out;
  for (int j = 0; j <= kJMax; ++j) {
    const long nj = kN0 << j;
    lad.advance_to(nj - kSmooth);
    BigFloat t = smooth_w[kSmooth].convert_to<BigFloat>() * lad.outer();
    for (int i = kSmooth - 1; i >= 0; --i) {
      lad.advance_to(nj - i);
      t += smooth_w[i].convert_to<BigFloat>() * lad.outer();
    }
    smoothed.push_back(t / smooth_scale);

    // Richardson triangle over the checkpoints collected so far.
    std::vector<BigFloat> row = smoothed;
    for (std::size_t s = 0; s + 1 < smoothed.size(); ++s) {
      const int e = 1 + static_cast<int>(s) / rep;
      const BigFloat f = pow(BigFloat(2), e);
      std::vector<BigFloat> next;
      for (std::size_t i = 0; i + 1 < row.size(); ++i)
        next.push_back((f * row[i + 1] - row[i]) / (f - 1));
      row = std::move(next);
    }
    out.iterates.push_back(row.front());
    const std::size_t n = out.iterates.size();
    if (n >= 2 && abs(out.iterates[n - 1] - out.iterates[n - 2]) < stop_eps) break;
  }

  out.kind = LimitResult::Kind::converged;
  out.value = out.iterates.back();
  out.note = "smoothed Richardson ladder, " + std::to_string(lad.position()) + " terms";
  return out;
}

}  // namespace

LimitResult limit_to_infinity(const GeneralIndex& idx, unsigned digits) {
  for (std::size_t i = 0; i < idx.entries.size(); ++i) {
    if (idx.entries[i].weight.abs() > Rational(1)) {
      LimitResult out;
      out.kind = LimitResult::Kind::diverges_weight;
      out.note = "weight magnitude exceeds 1 at level " + std::to_string(i + 1) +
                 "; the sum may grow exponentially";
      return out;
    }
  }
  int p = 0;
  while (p < static_cast<int>(idx.entries.size()) && idx.entries[p].exponent == 1 &&
         idx.entries[p].weight == Rational(1))
    ++p;
  if (p > 0) {
    LimitResult out;
    out.kind = LimitResult::Kind::diverges_sigma0;
    out.sigma0_power = p;
    out.note = "diverges; leading behavior is polynomial of degree " + std::to_string(p) +
               " in sigma_0";
    return out;
  }

  ScopedPrecision sp(digits + 25);
  if (idx.entries.empty()) {
    LimitResult out;
    out.kind = LimitResult::Kind::converged;
    out.value = 1;
    out.iterates = {out.value};
    out.note = "empty index";
    return out;
  }
  if (idx.entries.front().weight.abs() < Rational(1)) return direct_limit(idx, digits);
  return richardson_limit(idx, digits);
}

LimitResult limit_to_infinity(const HarmonicIndex& idx, unsigned digits) {
  return limit_to_infinity(GeneralIndex::from_harmonic(idx), digits);
}

}  // namespace nestsum
