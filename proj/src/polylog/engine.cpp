#include "nestsum/polylog/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace nestsum::quad {

namespace {

// Node positions and the cosine matrix for the direct coefficient transform,
// rebuilt when the working precision changes. Thread-local: builds at
// different precisions must not share tables.
struct ChebTable {
  unsigned precision = 0;
  std::vector<BigFloat> nodes;            // t_j = cos(pi (j+1/2)/n)
  std::vector<std::vector<BigFloat>> cosmat;  // [k][j] = cos(pi k (j+1/2)/n)
};

const ChebTable& table() {
  thread_local ChebTable tab;
  unsigned prec = BigFloat::default_precision();
  if (tab.precision != prec) {
    tab.precision = prec;
    tab.nodes.assign(kNodes, BigFloat(0));
    tab.cosmat.assign(kNodes, std::vector<BigFloat>(kNodes, BigFloat(0)));
    BigFloat pi = bf_pi();
    for (int j = 0; j < kNodes; ++j) {
      BigFloat theta = pi * (2 * j + 1) / (2 * kNodes);
      for (int k = 0; k < kNodes; ++k) tab.cosmat[k][j] = cos(k * theta);
      tab.nodes[j] = tab.cosmat[1][j];
    }
  }
  return tab;
}

// Clenshaw sum of a T-series with a true (unhalved) constant coefficient.
BigFloat clenshaw(const std::vector<BigFloat>& a, const BigFloat& t) {
  BigFloat u1(0), u2(0), two_t = 2 * t;
  for (std::size_t k = a.size() - 1; k >= 1; --k) {
    BigFloat u = a[k] + two_t * u1 - u2;
    u2 = std::move(u1);
    u1 = std::move(u);
  }
  return a[0] + t * u1 - u2;
}

// Samples g on [lo, hi], accepts if the coefficient tail is within tail_tol,
// and emits the panel's antiderivative coefficients.
bool try_panel(const Fn& g, const BigFloat& lo, const BigFloat& hi, const BigFloat& tail_tol,
               Panel* out) {
  const ChebTable& tab = table();
  BigFloat mid = (lo + hi) / 2, half = (hi - lo) / 2;
  std::vector<BigFloat> f(kNodes);
  for (int j = 0; j < kNodes; ++j) f[j] = g(mid + half * tab.nodes[j]);

  std::vector<BigFloat> d(kNodes, BigFloat(0));
  for (int k = 0; k < kNodes; ++k) {
    BigFloat s(0);
    for (int j = 0; j < kNodes; ++j) s += f[j] * tab.cosmat[k][j];
    d[k] = s * (k == 0 ? 1 : 2) / kNodes;
  }

  BigFloat tail(0);
  for (int k = kNodes - 4; k < kNodes; ++k) tail = std::max(tail, bf_abs(d[k]));
  if (tail > tail_tol) return false;

  // Antiderivative of sum d_k T_k: B_1 = d_0 - d_2/2, B_m = (d_{m-1}-d_{m+1})/(2m),
  // scaled by the half-width; B_0 chosen so the value at t = -1 is zero.
  std::vector<BigFloat> B(kNodes + 1, BigFloat(0));
  B[1] = (d[0] - d[2] / 2) * half;
  for (int m = 2; m <= kNodes; ++m) {
    BigFloat num = d[m - 1] - (m + 1 < kNodes ? d[m + 1] : BigFloat(0));
    B[m] = num * half / (2 * m);
  }
  BigFloat b0(0);
  for (int m = 1; m <= kNodes; ++m) {
    if (m & 1)
      b0 += B[m];
    else
      b0 -= B[m];
  }
  B[0] = b0;

  out->lo = lo;
  out->hi = hi;
  out->anti = std::move(B);
  return true;
}

struct Builder {
  const Fn& g;
  const BigFloat& tail_tol;
  PiecewiseRep& rep;
  int budget;
  BigFloat width_floor;

  void emit(const BigFloat& a, const BigFloat& b) {
    if (--budget < 0) throw std::runtime_error("quadrature panel budget exhausted");
    Panel p;
    if (try_panel(g, a, b, tail_tol, &p)) {
      rep.append(std::move(p));
      return;
    }
    if (b - a < width_floor)
      throw std::runtime_error("quadrature failed to converge (non-integrable integrand?)");
    BigFloat mid = (a + b) / 2;
    emit(a, mid);
    emit(mid, b);
  }
};

}  // namespace

BigFloat PiecewiseRep::value(const BigFloat& y) const {
  if (panels_.empty()) {
    if (y == origin_) return BigFloat(0);
    throw std::logic_error("empty representation queried");
  }
  // Last panel whose lo is <= y; clamp slop into the end panels.
  auto it = std::upper_bound(panels_.begin(), panels_.end(), y,
                             [](const BigFloat& v, const Panel& p) { return v < p.lo; });
  if (it == panels_.begin())
    it = panels_.begin();
  else
    --it;
  const Panel& p = *it;
  BigFloat t = (2 * y - p.lo - p.hi) / (p.hi - p.lo);
  if (t < -1) t = BigFloat(-1);
  if (t > 1) t = BigFloat(1);
  return p.base + clenshaw(p.anti, t);
}

BigFloat PiecewiseRep::total() const {
  if (panels_.empty()) return BigFloat(0);
  const Panel& p = panels_.back();
  return p.base + clenshaw(p.anti, BigFloat(1));
}

std::vector<BigFloat> PiecewiseRep::boundaries() const {
  std::vector<BigFloat> b;
  b.reserve(panels_.size() + 1);
  b.push_back(origin_);
  for (const Panel& p : panels_) b.push_back(p.hi);
  return b;
}

void PiecewiseRep::append(Panel p) {
  p.base = total();
  upper_ = p.hi;
  panels_.push_back(std::move(p));
}

void extend_rep(PiecewiseRep& rep, const Fn& g, const BigFloat& hi, std::vector<BigFloat> cuts,
                const BigFloat& tail_tol, int max_panels) {
  BigFloat lo = rep.upper_limit();
  if (hi <= lo) return;
  std::sort(cuts.begin(), cuts.end());
  std::vector<BigFloat> bs;
  bs.push_back(lo);
  BigFloat min_gap = (hi - lo) / 1000000;
  for (const BigFloat& c : cuts)
    if (c > bs.back() + min_gap && c < hi - min_gap) bs.push_back(c);
  bs.push_back(hi);

  Builder builder{g, tail_tol, rep, max_panels, (hi - lo) * BigFloat("1e-35")};
  for (std::size_t i = 0; i + 1 < bs.size(); ++i) builder.emit(bs[i], bs[i + 1]);
}

PiecewiseRep build_rep(const Fn& g, const BigFloat& lo, const BigFloat& hi,
                       std::vector<BigFloat> cuts, const BigFloat& tail_tol, int max_panels) {
  PiecewiseRep rep(lo);
  extend_rep(rep, g, hi, std::move(cuts), tail_tol, max_panels);
  return rep;
}

BigFloat integrate(const Fn& g, const BigFloat& lo, const BigFloat& hi, std::vector<BigFloat> cuts,
                   const BigFloat& tail_tol) {
  return build_rep(g, lo, hi, std::move(cuts), tail_tol).total();
}

}  // namespace nestsum::quad
