#include "nestsum/polylog/hpl.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "nestsum/algebra/products.hpp"
#include "nestsum/polylog/engine.hpp"
#include "nestsum/sums/constants.hpp"

namespace nestsum {
namespace detail {
namespace {

using Terms = std::vector<ExtractTerm>;

void add_term(Terms& acc, ExtractTerm t) {
  if (t.coeff.is_zero()) return;
  for (auto& e : acc) {
    if (e.log_pow == t.log_pow && e.one_pow == t.one_pow && e.core == t.core) {
      e.coeff += t.coeff;
      return;
    }
  }
  acc.push_back(std::move(t));
}

Rational inv_factorial(int k) {
  Rational r(1);
  for (int i = 2; i <= k; ++i) r /= Rational(i);
  return r;
}

int leading_ones(const PolyLogWord& w) {
  int n = 0;
  for (const auto& l : w.letters()) {
    if (!l.is_root_one()) break;
    ++n;
  }
  return n;
}

// H_{v 0^k} = (1/k) [ H_{v 0^{k-1}} ln x - sum_i H_{(v with a 0 inserted
// before position i) 0^{k-1}} ]; each right-hand word has fewer trailing
// zeros, so the recursion terminates with zero-free tails.
Terms extract_trailing(const PolyLogWord& w) {
  const int k = w.trailing_zeros();
  if (k == 0) return {{Rational(1), 0, 0, w}};
  const int m = w.weight() - k;
  if (m == 0) return {{inv_factorial(k), k, 0, PolyLogWord{}}};
  const auto& ls = w.letters();
  const std::vector<PolyLetter> v(ls.begin(), ls.begin() + m);
  Terms out;
  {
    std::vector<PolyLetter> base = v;
    for (int i = 0; i < k - 1; ++i) base.push_back(PolyLetter::harmonic(0));
    for (ExtractTerm t : extract_trailing(PolyLogWord(std::move(base)))) {
      t.coeff /= Rational(k);
      t.log_pow += 1;
      add_term(out, std::move(t));
    }
  }
  for (int i = 0; i < m; ++i) {
    std::vector<PolyLetter> u;
    u.reserve(static_cast<std::size_t>(w.weight()));
    u.insert(u.end(), v.begin(), v.begin() + i);
    u.push_back(PolyLetter::harmonic(0));
    u.insert(u.end(), v.begin() + i, v.end());
    for (int j = 0; j < k - 1; ++j) u.push_back(PolyLetter::harmonic(0));
    for (ExtractTerm t : extract_trailing(PolyLogWord(std::move(u)))) {
      t.coeff = -t.coeff / Rational(k);
      add_term(out, std::move(t));
    }
  }
  return out;
}

// Mirror recursion at the other end: H_{1^k v} = (1/k) [ H_1 H_{1^{k-1} v}
// - sum_j H_{1^{k-1} (v with a 1 inserted after position j)} ], H_1 being
// the extracted -ln(1-x) factor.
Terms extract_leading(const PolyLogWord& w) {
  const int k = leading_ones(w);
  if (k == 0) return {{Rational(1), 0, 0, w}};
  const int m = w.weight() - k;
  if (m == 0) return {{inv_factorial(k), 0, k, PolyLogWord{}}};
  const auto& ls = w.letters();
  const std::vector<PolyLetter> v(ls.begin() + k, ls.end());
  Terms out;
  {
    std::vector<PolyLetter> base;
    base.reserve(static_cast<std::size_t>(w.weight()));
    for (int i = 0; i < k - 1; ++i) base.push_back(PolyLetter::harmonic(1));
    base.insert(base.end(), v.begin(), v.end());
    for (ExtractTerm t : extract_leading(PolyLogWord(std::move(base)))) {
      t.coeff /= Rational(k);
      t.one_pow += 1;
      add_term(out, std::move(t));
    }
  }
  for (int j = 1; j <= m; ++j) {
    std::vector<PolyLetter> u;
    u.reserve(static_cast<std::size_t>(w.weight()));
    for (int i = 0; i < k - 1; ++i) u.push_back(PolyLetter::harmonic(1));
    u.insert(u.end(), v.begin(), v.begin() + j);
    u.push_back(PolyLetter::harmonic(1));
    u.insert(u.end(), v.begin() + j, v.end());
    for (ExtractTerm t : extract_leading(PolyLogWord(std::move(u)))) {
      t.coeff = -t.coeff / Rational(k);
      add_term(out, std::move(t));
    }
  }
  return out;
}

std::map<PolyLogWord, Terms> g_extract_cache;
std::mutex g_extract_mu;

// Representation cache, shared across evaluations. The key quantizes the
// tail tolerance to decades of four digits so nearby tolerances reuse work.
struct RepKey {
  PolyLogWord word;
  long bucket;
  friend bool operator<(const RepKey& a, const RepKey& b) {
    if (a.bucket != b.bucket) return a.bucket < b.bucket;
    return a.word < b.word;
  }
};

std::map<RepKey, quad::PiecewiseRep> g_rep_cache;
std::recursive_mutex g_rep_mu;

long bucket_of(const BigFloat& tail_tol) {
  double e = -std::log10(tail_tol.convert_to<double>());
  if (e < 4) e = 4;
  if (e > 64) e = 64;
  return 4 * static_cast<long>(std::ceil(e / 4.0));
}

std::optional<Rational> min_interior_pole(const PolyLogWord& w) {
  std::optional<Rational> best;
  for (const auto& l : w.letters()) {
    auto b = l.interior_pole();
    if (b && (!best || *b < *best)) best = b;
  }
  return best;
}

// Grows the cached antiderivative of the core word up to at least X.
// Extensions overshoot the request so clustered queries share panels; the
// overshoot is capped below any interior kernel pole and below 1.
const quad::PiecewiseRep& ensure_rep(const PolyLogWord& core, const BigFloat& X, long bucket) {
  std::lock_guard<std::recursive_mutex> lk(g_rep_mu);
  RepKey key{core, bucket};
  auto it = g_rep_cache.find(key);
  if (it == g_rep_cache.end())
    it = g_rep_cache.emplace(key, quad::PiecewiseRep(BigFloat(0))).first;
  quad::PiecewiseRep& rep = it->second;  // map nodes are stable under later inserts
  if (rep.upper_limit() >= X) return rep;

  BigFloat target = X <= BigFloat("0.5") ? BigFloat("0.6") : 1 - (1 - X) / 4;
  if (auto bmin = min_interior_pole(core)) {
    BigFloat b = bmin->to_bigfloat();
    if (!(X < b)) throw std::domain_error("kernel pole inside the integration range");
    BigFloat capped = X + (b - X) / 2;
    if (capped < target) target = capped;
  }
  if (target < X) target = X;

  BigFloat tau = pow(BigFloat(10), -static_cast<int>(bucket));
  const auto& ls = core.letters();
  const PolyLetter outer = ls.front();
  const PolyLogWord suffix(std::vector<PolyLetter>(ls.begin() + 1, ls.end()));
  if (suffix.empty()) {
    quad::Fn g = [outer](const BigFloat& y) { return outer.value(y); };
    quad::extend_rep(rep, g, target, {}, tau);
  } else {
    const quad::PiecewiseRep& inner = ensure_rep(suffix, target, bucket);
    quad::Fn g = [outer, &inner](const BigFloat& y) { return outer.value(y) * inner.value(y); };
    quad::extend_rep(rep, g, target, inner.boundaries(), tau);
  }
  return rep;
}

void reject_sqrt_letters(const PolyLogWord& w, const char* who) {
  for (const auto& l : w.letters())
    if (l.kind() == PolyLetter::Kind::sqrt_form)
      throw std::domain_error(std::string(who) + " does not take sqrt-form letters");
}

void check_open_unit(const BigFloat& x) {
  if (!(x > 0) || !(x < 1)) throw std::domain_error("argument must lie in (0,1)");
}

void check_poles_above(const PolyLogWord& w, const BigFloat& x) {
  for (const auto& l : w.letters()) {
    auto b = l.interior_pole();
    if (b && !(x < b->to_bigfloat()))
      throw std::domain_error("argument must stay below the kernel pole at " + b->str());
  }
}

}  // namespace

std::vector<ExtractTerm> extract(const PolyLogWord& w) {
  std::lock_guard<std::mutex> lk(g_extract_mu);
  auto it = g_extract_cache.find(w);
  if (it != g_extract_cache.end()) return it->second;
  Terms out;
  for (const ExtractTerm& t : extract_trailing(w)) {
    for (ExtractTerm s : extract_leading(t.core)) {
      s.coeff *= t.coeff;
      s.log_pow += t.log_pow;
      add_term(out, std::move(s));
    }
  }
  g_extract_cache.emplace(w, out);
  return out;
}

BigFloat eval_core(const PolyLogWord& core, const BigFloat& x, const BigFloat& tail_tol) {
  if (core.empty()) return BigFloat(1);
  const long bucket = bucket_of(tail_tol);
  // Cores are regular at 0 and continuous at 1, so clamping queries just
  // under 1 changes the value by far less than any supported tolerance.
  BigFloat xcap = 1 - pow(BigFloat(10), -static_cast<int>(bucket + 6));
  const BigFloat& xe = x < xcap ? x : xcap;
  std::lock_guard<std::recursive_mutex> lk(g_rep_mu);
  const quad::PiecewiseRep& rep = ensure_rep(core, xe, bucket);
  return rep.value(xe);
}

BigFloat eval_word(const PolyLogWord& w, const BigFloat& x, const BigFloat& tail_tol) {
  if (w.empty()) return BigFloat(1);
  const BigFloat lnx = log(x);
  const BigFloat lone = -log1p(-x);
  BigFloat acc(0);
  for (const ExtractTerm& t : extract(w)) {
    BigFloat v = t.coeff.to_bigfloat();
    for (int i = 0; i < t.log_pow; ++i) v *= lnx;
    for (int i = 0; i < t.one_pow; ++i) v *= lone;
    if (!t.core.empty()) v *= eval_core(t.core, x, tail_tol);
    acc += v;
  }
  return acc;
}

unsigned work_digits(const BigFloat& tol) {
  double t = tol.convert_to<double>();
  if (!(t > 0)) throw std::invalid_argument("tolerance must be positive");
  double e = -std::log10(t);
  if (e < 0) e = 0;
  if (e > 40) e = 40;
  return static_cast<unsigned>(e) + 24;
}

BigFloat tail_target(const BigFloat& tol) {
  BigFloat t = tol * BigFloat("1e-8");
  BigFloat floor_tau("1e-48");
  return t < floor_tau ? floor_tau : t;
}

}  // namespace detail

BigFloat hpl_eval(const PolyLogWord& w, const BigFloat& x, const BigFloat& tol) {
  if (!w.all_harmonic())
    throw std::domain_error("hpl_eval takes the {0,1,-1} alphabet; see hpl_eval_general");
  if (w.weight() > 5) throw std::domain_error("hpl_eval supports weight <= 5");
  detail::check_open_unit(x);
  ScopedPrecision sp(detail::work_digits(tol));
  return detail::eval_word(w, x, detail::tail_target(tol));
}

BigFloat hpl_eval_general(const PolyLogWord& w, const BigFloat& x, const BigFloat& tol) {
  if (w.weight() > 4) throw std::domain_error("hpl_eval_general supports weight <= 4");
  detail::reject_sqrt_letters(w, "hpl_eval_general");
  if (!(x > 0) || !(x <= 1)) throw std::domain_error("argument must lie in (0,1]");
  if (x == 1) {
    for (const auto& l : w.letters())
      if (l.singular_at_one())
        throw std::domain_error("word diverges at x = 1");
  }
  detail::check_poles_above(w, x);
  ScopedPrecision sp(detail::work_digits(tol));
  return detail::eval_word(w, x, detail::tail_target(tol));
}

BigFloat hpl_eval_star(const PolyLogWord& w, const BigFloat& x, const BigFloat& tol) {
  if (w.weight() > 4) throw std::domain_error("hpl_eval_star supports weight <= 4");
  detail::check_open_unit(x);
  for (const auto& l : w.letters()) {
    if (l.singular_at_one()) throw std::domain_error("kernel singular at the upper endpoint 1");
    auto b = l.interior_pole();
    if (b && !(b->to_bigfloat() < x))
      throw std::domain_error("kernel pole inside [x, 1]");
  }
  if (w.empty()) return BigFloat(1);
  ScopedPrecision sp(detail::work_digits(tol));
  const BigFloat tau = detail::tail_target(tol);
  // Build antiderivatives A_v(y) = int_x^y f H*_suffix from the innermost
  // letter outward; H*_v(y) = A_v(1) - A_v(y), and the requested value is
  // A_outer(1) since A_outer(x) = 0.
  const auto& ls = w.letters();
  std::vector<quad::PiecewiseRep> reps;
  reps.reserve(ls.size());
  for (int i = w.weight() - 1; i >= 0; --i) {
    const PolyLetter letter = ls[static_cast<std::size_t>(i)];
    quad::PiecewiseRep rep(x);
    if (reps.empty()) {
      quad::Fn g = [letter](const BigFloat& y) { return letter.value(y); };
      quad::extend_rep(rep, g, BigFloat(1), {}, tau);
    } else {
      const quad::PiecewiseRep& inner = reps.back();
      const BigFloat inner_total = inner.total();
      quad::Fn g = [letter, &inner, inner_total](const BigFloat& y) {
        return letter.value(y) * (inner_total - inner.value(y));
      };
      quad::extend_rep(rep, g, BigFloat(1), inner.boundaries(), tau);
    }
    reps.push_back(std::move(rep));
  }
  return reps.back().total();
}

bool verify_shuffle(const PolyLogWord& u, const PolyLogWord& v, const BigFloat& x,
                    const BigFloat& tol) {
  if (u.weight() + v.weight() > 5)
    throw std::domain_error("verify_shuffle supports combined weight <= 5");
  detail::reject_sqrt_letters(u, "verify_shuffle");
  detail::reject_sqrt_letters(v, "verify_shuffle");
  detail::check_open_unit(x);
  detail::check_poles_above(u, x);
  detail::check_poles_above(v, x);
  ScopedPrecision sp(detail::work_digits(tol) + 6);
  const BigFloat tau = detail::tail_target(tol) * BigFloat("1e-3");
  const BigFloat lhs = detail::eval_word(u, x, tau) * detail::eval_word(v, x, tau);
  BigFloat rhs(0);
  const auto interleavings = shuffle(u.letters(), v.letters());
  for (const auto& [word, coeff] : interleavings.terms())
    rhs += coeff.to_bigfloat() * detail::eval_word(PolyLogWord(word), x, tau);
  return bf_abs(lhs - rhs) <= tol;
}

bool verify_arg_transform(const BigFloat& x, const BigFloat& tol) {
  detail::check_open_unit(x);
  const unsigned digits = detail::work_digits(tol) + 8;
  ScopedPrecision sp(digits);
  const BigFloat tau = detail::tail_target(tol) * BigFloat("1e-4");
  auto ev = [&tau](const std::vector<int>& w, const BigFloat& arg) {
    return detail::eval_word(PolyLogWord::harmonic(w), arg, tau);
  };
  const BigFloat t = (1 - x) / (1 + x);
  const BigFloat z2 = ConstantSymbol::zeta(2).value(digits);
  const BigFloat z3 = ConstantSymbol::zeta(3).value(digits);
  const BigFloat l2 = bf_ln2();
  const BigFloat lhs = ev({-1, 0, 1}, t);
  const BigFloat h0 = ev({0}, x);
  const BigFloat hm1 = ev({-1}, x);
  const BigFloat hm11 = ev({-1, 1}, x);
  const BigFloat rhs = -hm11 * (h0 + l2)
                       + hm1 * (hm11 + ev({0, -1}, x) + ev({0, 1}, x) - z2)
                       - 2 * ev({-1, -1, 1}, x) - ev({0, -1, -1}, x) - ev({0, 1, -1}, x)
                       - hm1 * hm1 * (h0 + l2) / 2 + hm1 * hm1 * hm1 / 6
                       + l2 * z2 - BigFloat(5) * z3 / 8;
  return bf_abs(lhs - rhs) <= tol;
}

}  // namespace nestsum
