#pragma once

#include <functional>
#include <vector>

#include "nestsum/exact/numbers.hpp"

namespace nestsum::quad {

// Chebyshev points per panel (first kind, so endpoints are never sampled).
inline constexpr int kNodes = 32;

using Fn = std::function<BigFloat(const BigFloat&)>;

// One accepted panel [lo, hi]: Chebyshev coefficients of the local
// antiderivative (zero at lo) plus the integral accumulated to the left.
struct Panel {
  BigFloat lo, hi;
  std::vector<BigFloat> anti;
  BigFloat base;
};

// Piecewise-spectral antiderivative F(y) = int_origin^y g over contiguous
// panels, appendable on the right so a representation can grow toward a
// singular endpoint on demand.
class PiecewiseRep {
 public:
  explicit PiecewiseRep(BigFloat origin) : origin_(std::move(origin)), upper_(origin_) {}

  const BigFloat& origin() const { return origin_; }
  const BigFloat& upper_limit() const { return upper_; }

  // F(y) for y in [origin, upper_limit]; slightly out-of-range y (rounding
  // slop) is clamped to the nearest covered point.
  BigFloat value(const BigFloat& y) const;
  // F(upper_limit).
  BigFloat total() const;

  const std::vector<Panel>& panels() const { return panels_; }
  // Interior panel joints; mandatory cuts for the next nesting level, since
  // the interpolant is only piecewise-analytic across them.
  std::vector<BigFloat> boundaries() const;

  void append(Panel p);

 private:
  BigFloat origin_, upper_;
  std::vector<Panel> panels_;
};

// Appends panels approximating int g over [rep.upper_limit(), hi]. cuts are
// mandatory breakpoints (filtered to the open extension range); a panel is
// accepted when its trailing Chebyshev coefficients fall below tail_tol,
// otherwise it is bisected. Throws std::runtime_error once the panel budget
// is exhausted (non-integrable singularity or unreachable tolerance).
void extend_rep(PiecewiseRep& rep, const Fn& g, const BigFloat& hi, std::vector<BigFloat> cuts,
                const BigFloat& tail_tol, int max_panels = 20000);

PiecewiseRep build_rep(const Fn& g, const BigFloat& lo, const BigFloat& hi,
                       std::vector<BigFloat> cuts, const BigFloat& tail_tol,
                       int max_panels = 20000);

// One-shot definite integral over [lo, hi].
BigFloat integrate(const Fn& g, const BigFloat& lo, const BigFloat& hi, std::vector<BigFloat> cuts,
                   const BigFloat& tail_tol);

}  // namespace nestsum::quad
