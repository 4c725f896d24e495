#include "nestsum/cli/run.hpp"

#include <cctype>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nestsum/algebra/basis.hpp"
#include "nestsum/algebra/counting.hpp"
#include "nestsum/algebra/products.hpp"
#include "nestsum/algebra/serialize.hpp"
#include "nestsum/cli/expr.hpp"
#include "nestsum/continuation/continuation.hpp"
#include "nestsum/exact/complex.hpp"
#include "nestsum/polylog/elliptic.hpp"
#include "nestsum/polylog/hpl.hpp"
#include "nestsum/polylog/mellin.hpp"
#include "nestsum/sums/eval.hpp"
#include "nestsum/sums/limits.hpp"

namespace nestsum::cli {

namespace {

using nlohmann::ordered_json;

constexpr unsigned kDefaultPrec = 15;
constexpr unsigned kMaxPrec = 40;
constexpr long kMaxArgument = 100000;

// Flag misuse discovered after CLI11 parsing (e.g. two count selectors).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  unsigned prec = kDefaultPrec;
  bool json = false;
};

struct Outcome {
  ordered_json result;
  std::string text;
  int code = 0;
};

unsigned env_precision() {
  const char* env = std::getenv("NESTSUM_PREC");
  if (!env || *env == '\0') return kDefaultPrec;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0') return kDefaultPrec;
  if (v < 1) return 1;
  if (v > static_cast<long>(kMaxPrec)) return kMaxPrec;
  return static_cast<unsigned>(v);
}

// Fixed-notation rendering with prec significant digits; the decimal-place
// count is derived from the exponent of the scientific rendering.
std::string decimal_str(const BigFloat& v, unsigned prec) {
  if (v == 0) return "0";
  const std::string sci = v.str(1, std::ios_base::scientific);
  const std::size_t epos = sci.find_first_of("eE");
  long e = 0;
  if (epos != std::string::npos) e = std::stol(sci.substr(epos + 1));
  long places = static_cast<long>(prec) - 1 - e;
  if (places < 1) places = 1;
  return v.str(places, std::ios_base::fixed);
}

BigFloat pow10_neg(unsigned k) { return BigFloat("1e-" + std::to_string(k)); }

Outcome outcome_rational(const Rational& v) {
  ordered_json r;
  r["kind"] = "rational";
  r["value"] = v.str();
  return {r, v.str(), 0};
}

Outcome outcome_integer(const Int& v) {
  ordered_json r;
  r["kind"] = "integer";
  r["value"] = v.str();
  return {r, v.str(), 0};
}

Outcome outcome_decimal(const BigFloat& v, unsigned prec) {
  ordered_json r;
  r["kind"] = "decimal";
  r["value"] = decimal_str(v, prec);
  return {r, r["value"].get<std::string>(), 0};
}

Outcome outcome_complex(const Complex& v, unsigned prec) {
  ordered_json r;
  r["kind"] = "complex";
  r["re"] = decimal_str(v.re, prec);
  r["im"] = decimal_str(v.im, prec);
  const std::string im_abs = decimal_str(bf_abs(v.im), prec);
  const std::string text =
      r["re"].get<std::string>() + (v.im < 0 ? "-" : "+") + im_abs + "i";
  return {r, text, 0};
}

std::string sum_str(const HarmonicIndex& idx) {
  std::string s = "S[";
  for (std::size_t i = 0; i < idx.entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx.entries[i]);
  }
  return s + "]";
}

std::string word_str(const std::vector<PolyLetter>& ls) {
  std::string s = "H[";
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) s += ",";
    s += ls[i].str();
  }
  return s + "]";
}

long to_long_checked(const Rational& r, const char* what, long lo, long hi) {
  if (!r.is_integer()) throw std::domain_error(std::string(what) + " must be an integer");
  if (r < Rational(lo) || r > Rational(hi))
    throw std::domain_error(std::string(what) + " must lie in [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
  return static_cast<long>(r.num());
}

HarmonicIndex harmonic_index(const SumExpr& e) { return HarmonicIndex(e.entries); }

GeneralIndex general_index(const SumExpr& e) {
  std::vector<SEntry> entries;
  entries.reserve(e.entries.size());
  for (std::size_t i = 0; i < e.entries.size(); ++i)
    entries.push_back({e.entries[i], e.weights[i].value});
  return GeneralIndex(std::move(entries));
}

CyclotomicIndex cyclotomic_index(const SumExpr& e) {
  std::vector<CycEntry> entries;
  entries.reserve(e.triples.size());
  for (std::size_t i = 0; i < e.triples.size(); ++i) {
    const auto& t = e.triples[i];
    entries.push_back({t[0], t[1], static_cast<int>(t[2]),
                       e.weights.empty() ? Rational(1) : e.weights[i].value});
  }
  return CyclotomicIndex(std::move(entries));
}

Outcome limit_outcome(const LimitResult& lr, unsigned prec) {
  if (lr.converged()) return outcome_decimal(lr.value, prec);
  ordered_json r;
  r["kind"] = "divergent";
  r["sigma0_power"] = lr.sigma0_power;
  r["note"] = lr.note;
  std::string text = "diverges";
  if (lr.kind == LimitResult::Kind::diverges_sigma0)
    text += " ~ sigma_0^" + std::to_string(lr.sigma0_power);
  std::string note = lr.note;
  if (note.rfind("diverges; ", 0) == 0) note = note.substr(10);
  if (!note.empty()) text += ": " + note;
  return {r, text, 0};
}

Outcome do_limit(const SumExpr& e, const Settings& st) {
  const unsigned digits = st.prec + 10;
  switch (e.family) {
    case SumExpr::Family::harmonic:
      return limit_outcome(limit_to_infinity(harmonic_index(e), digits), st.prec);
    case SumExpr::Family::general:
      return limit_outcome(limit_to_infinity(general_index(e), digits), st.prec);
    case SumExpr::Family::cyclotomic:
      throw std::domain_error("limit supports harmonic and generalized sums");
  }
  throw std::logic_error("unreachable");
}

Outcome eval_sum(const SumExpr& e, const Settings& st) {
  if (!e.arg)
    throw std::domain_error("this sum needs an argument; index-only forms are for product/reduce");
  if (e.arg->infinite) return do_limit(e, st);
  if (e.arg->im)
    throw std::domain_error("complex arguments go through the continue subcommand");
  const long N = to_long_checked(e.arg->re.value, "sum argument", 0, kMaxArgument);
  switch (e.family) {
    case SumExpr::Family::harmonic:
      return outcome_rational(eval_harmonic(harmonic_index(e), N));
    case SumExpr::Family::general:
      return outcome_rational(eval_ssum(general_index(e), N));
    case SumExpr::Family::cyclotomic:
      return outcome_rational(eval_cyclotomic(cyclotomic_index(e), N));
  }
  throw std::logic_error("unreachable");
}

Outcome eval_polylog(const PolylogExpr& e, const Settings& st) {
  if (!e.x) throw std::domain_error("this polylog needs an argument");
  const BigFloat x = e.x->value.to_bigfloat();
  const BigFloat tol = pow10_neg(st.prec + 2);
  BigFloat v;
  if (e.star)
    v = hpl_eval_star(e.word, x, tol);
  else if (e.word.all_harmonic())
    v = hpl_eval(e.word, x, tol);
  else
    v = hpl_eval_general(e.word, x, tol);
  return outcome_decimal(v, st.prec);
}

Int count_value(const std::string& tag, long w) {
  if (w < 1 || w > 100000) throw std::domain_error("count weight must lie in [1, 100000]");
  const int wi = static_cast<int>(w);
  if (tag == "all") return count_all(wi);
  if (tag == "a") return count_A(wi);
  if (tag == "d") return count_D(wi);
  if (tag == "h") return count_H(wi);
  return count_ADH(wi);
}

// Exact elliptic singular-integral moment 4^(2N+1) / (C(2N,N)^2 (2N+1)^2).
Rational elliptic_moment_exact(long N) {
  Int c(1);
  for (long i = 1; i <= N; ++i) c = c * Int(N + i) / Int(i);
  const Rational fourpow = Rational(4).pow(2 * N + 1);
  return fourpow / Rational(c * c * Int((2 * N + 1) * (2 * N + 1)));
}

bool verify_shuffle_all(const BigFloat& x, const BigFloat& tol) {
  std::vector<std::vector<int>> words;
  const int letters[3] = {0, 1, -1};
  for (int len = 1; len <= 3; ++len) {
    const int total = len == 1 ? 3 : len == 2 ? 9 : 27;
    for (int code = 0; code < total; ++code) {
      std::vector<int> w(len);
      int c = code;
      for (int i = 0; i < len; ++i) {
        w[i] = letters[c % 3];
        c /= 3;
      }
      words.push_back(std::move(w));
    }
  }
  bool ok = true;
  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.size() + v.size() > 4) continue;
      ok = ok && verify_shuffle(PolyLogWord::harmonic(u), PolyLogWord::harmonic(v), x, tol);
    }
  return ok;
}

bool verify_duplication_all(long N) {
  bool ok = true;
  for (int a = 1; a <= 5; ++a) ok = ok && duplication_check(a, N) && duplication_check(-a, N);
  return ok;
}

bool verify_elliptic_moment(long N, const BigFloat& tol) {
  const auto T = [](const BigFloat& y) { return eval_T(y, BigFloat("1e-15")); };
  // The ln(x) endpoint behavior of the N = 0 integrand makes the dyadic
  // sliver closure first-order, so the quadrature runs well below tol.
  const BigFloat got = mellin_moment(T, N, BigFloat("1e-9"));
  return bf_abs(got - elliptic_moment_exact(N).to_bigfloat()) < tol;
}

Outcome do_verify(const VerifyExpr& v, const std::optional<std::string>& tol_text) {
  std::string tol_str;
  bool exact = false;
  if (v.name == "mellin")
    tol_str = "1e-8";
  else if (v.name == "argtransform" || v.name == "shuffle")
    tol_str = "1e-10";
  else if (v.name == "elliptic")
    tol_str = "1e-6";
  else
    exact = true;
  if (tol_text && !exact) tol_str = *tol_text;

  bool ok = false;
  if (v.name == "mellin") {
    const long N = to_long_checked(v.arg.value, "mellin check order", 1, 8);
    ok = verify_mellin_identity(N, BigFloat(tol_str));
  } else if (v.name == "argtransform") {
    const Rational& x = v.arg.value;
    if (!(x > Rational(0) && x < Rational(1)))
      throw std::domain_error("argument-transform check needs 0 < x < 1");
    ok = verify_arg_transform(x.to_bigfloat(), BigFloat(tol_str));
  } else if (v.name == "shuffle") {
    const Rational& x = v.arg.value;
    if (!(x > Rational(0) && x < Rational(1)))
      throw std::domain_error("shuffle check needs 0 < x < 1");
    ok = verify_shuffle_all(x.to_bigfloat(), BigFloat(tol_str));
  } else if (v.name == "duplication") {
    const long N = to_long_checked(v.arg.value, "duplication check argument", 1, kMaxArgument);
    ok = verify_duplication_all(N);
  } else {
    const long N = to_long_checked(v.arg.value, "elliptic moment order", 0, 4);
    ok = verify_elliptic_moment(N, BigFloat(tol_str));
  }

  ordered_json r;
  r["kind"] = "bool";
  r["value"] = ok;
  std::string text;
  if (exact)
    text = ok ? "OK (exact)" : "FAIL (exact identity violated)";
  else
    text = ok ? "OK (|Δ| < " + tol_str + ")" : "FAIL (|Δ| >= " + tol_str + ")";
  return {r, text, ok ? 0 : 1};
}

Outcome do_eval(const std::string& input, const Settings& st) {
  const Expression e = parse(input);
  if (const auto* s = std::get_if<SumExpr>(&e)) return eval_sum(*s, st);
  if (const auto* p = std::get_if<PolylogExpr>(&e)) return eval_polylog(*p, st);
  if (const auto* c = std::get_if<CountExpr>(&e))
    return outcome_integer(count_value(c->tag, c->weight));
  return do_verify(std::get<VerifyExpr>(e), std::nullopt);
}

Outcome do_limit_cmd(const std::string& input, const Settings& st) {
  const Expression e = parse(input);
  const auto* s = std::get_if<SumExpr>(&e);
  if (!s) throw std::domain_error("limit takes a sum expression");
  if (s->arg && !s->arg->infinite)
    throw std::domain_error("limit takes an index-only sum or an (inf) argument");
  return do_limit(*s, st);
}

Outcome combination_outcome(std::vector<std::pair<std::string, std::string>> rows,
                            ordered_json terms) {
  ordered_json r;
  r["kind"] = "combination";
  r["terms"] = std::move(terms);
  std::string text;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) text += "\n";
    text += rows[i].first + " " + rows[i].second;
  }
  if (rows.empty()) text = "0";
  return {r, text, 0};
}

Outcome do_product(const std::string& in1, const std::string& in2, const Settings&) {
  const Expression e1 = parse(in1);
  const Expression e2 = parse(in2);
  const auto* s1 = std::get_if<SumExpr>(&e1);
  const auto* s2 = std::get_if<SumExpr>(&e2);
  if (s1 && s2) {
    if (s1->family != SumExpr::Family::harmonic || s2->family != SumExpr::Family::harmonic)
      throw std::domain_error("product supports harmonic sum indices");
    if (s1->arg || s2->arg) throw std::domain_error("product takes index-only sums");
    const auto lc = stuffle(harmonic_index(*s1), harmonic_index(*s2));
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [k, c] : lc.terms()) rows.emplace_back(c.str(), sum_str(k));
    return combination_outcome(std::move(rows), to_json(lc)["terms"]);
  }
  const auto* p1 = std::get_if<PolylogExpr>(&e1);
  const auto* p2 = std::get_if<PolylogExpr>(&e2);
  if (p1 && p2) {
    if (p1->star || p2->star) throw std::domain_error("product supports plain H words");
    if (p1->x || p2->x) throw std::domain_error("product takes index-only words");
    const auto lc = shuffle(p1->word.letters(), p2->word.letters());
    std::vector<std::pair<std::string, std::string>> rows;
    ordered_json terms = ordered_json::array();
    for (const auto& [k, c] : lc.terms()) {
      rows.emplace_back(c.str(), word_str(k));
      ordered_json w = ordered_json::array();
      for (const auto& l : k) w.push_back(l.str());
      terms.push_back({{"coeff", c.str()}, {"word", std::move(w)}});
    }
    return combination_outcome(std::move(rows), std::move(terms));
  }
  throw std::domain_error("product needs two harmonic sums or two polylog words");
}

Outcome do_reduce(const std::string& input, const Settings&) {
  const Expression e = parse(input);
  const auto* s = std::get_if<SumExpr>(&e);
  if (!s || s->family != SumExpr::Family::harmonic)
    throw std::domain_error("reduce takes a harmonic sum index");
  if (s->arg) throw std::domain_error("reduce takes an index-only sum");
  const BasisPolynomial p = reduce_to_basis(harmonic_index(*s));
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [mono, c] : p.terms()) {
    std::string m;
    if (mono.empty()) m = "1";
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (i) m += "*";
      m += sum_str(mono[i]);
    }
    rows.emplace_back(c.str(), m);
  }
  return combination_outcome(std::move(rows), to_json(p)["terms"]);
}

Outcome do_mellin(const std::string& expr, long N, bool over_one_plus_x, long xpow,
                  const Settings& st) {
  MellinIntegrand mi;
  mi.x_power = static_cast<int>(xpow);
  mi.over_one_plus_x = over_one_plus_x;
  if (!expr.empty()) {
    const Expression e = parse(expr);
    const auto* p = std::get_if<PolylogExpr>(&e);
    if (!p || p->star) throw std::domain_error("mellin takes a plain H word");
    if (p->x) throw std::domain_error("mellin takes an index-only word");
    mi.word = p->word;
  }
  unsigned tol_exp = st.prec + 2;
  if (tol_exp > 20) tol_exp = 20;
  const BigFloat v = mellin_moment(mi, N, pow10_neg(tol_exp));
  return outcome_decimal(v, st.prec);
}

Outcome do_continue(const std::string& input, Parity parity, const Settings& st) {
  const Expression e = parse(input);
  const auto* s = std::get_if<SumExpr>(&e);
  if (!s || s->family != SumExpr::Family::harmonic || s->entries.size() != 1)
    throw std::domain_error("continue takes a depth-1 harmonic sum S[a](z)");
  if (!s->arg || s->arg->infinite)
    throw std::domain_error("continue needs a finite numeric argument");
  const Complex N{s->arg->re.value.to_bigfloat(),
                  s->arg->im ? s->arg->im->value.to_bigfloat() : BigFloat(0)};
  const Complex v = continue_single(s->entries[0], N, parity);
  if (v.im == 0) return outcome_decimal(v.re, st.prec);
  return outcome_complex(v, st.prec);
}

// Rational from "n", "n/d" or a plain decimal; flag values only.
Rational flag_number(const std::string& s) {
  const std::size_t dot = s.find('.');
  try {
    if (dot == std::string::npos) return Rational(s);
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = false;
    if (!ip.empty() && ip[0] == '-') {
      neg = true;
      ip = ip.substr(1);
    }
    if (ip.empty() || fp.empty()) throw std::invalid_argument("bad decimal");
    for (char c : ip + fp)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad decimal");
    Int den(1);
    for (std::size_t k = 0; k < fp.size(); ++k) den *= 10;
    std::string digits = ip + fp;
    const std::size_t nz = digits.find_first_not_of('0');
    digits = nz == std::string::npos ? "0" : digits.substr(nz);
    Rational r{Int(digits), den};
    return neg ? -r : r;
  } catch (const std::invalid_argument&) {
    throw UsageError("could not parse number '" + s + "'");
  }
}

void emit_ok(std::ostream& out, const Settings& st, const std::string& cmd,
             const std::string& input, const Outcome& oc) {
  if (!st.json) {
    out << oc.text << "\n";
    return;
  }
  ordered_json env;
  env["command"] = cmd;
  env["input"] = input;
  env["status"] = "ok";
  env["precision"] = st.prec;
  env["result"] = oc.result;
  out << env.dump() << "\n";
}

void emit_error(std::ostream& out, std::ostream& err, const Settings& st, const std::string& cmd,
                const std::string& input, const std::string& type, const std::string& message,
                std::optional<std::size_t> offset) {
  if (!st.json) {
    err << message << "\n";
    return;
  }
  ordered_json env;
  env["command"] = cmd;
  env["input"] = input;
  env["status"] = "error";
  env["precision"] = st.prec;
  ordered_json eobj;
  eobj["type"] = type;
  eobj["message"] = message;
  if (offset) eobj["offset"] = *offset;
  env["error"] = eobj;
  out << env.dump() << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"nested harmonic/cyclotomic sums, their polylogarithms and continuations"};
  app.name("nestsum");
  app.require_subcommand(1);

  bool json = false;
  long prec_opt = 0;
  app.add_flag("--json", json, "emit a single-line JSON envelope");
  app.add_option("--prec", prec_opt, "printed digits and working precision (1..40)")
      ->check(CLI::Range(1L, static_cast<long>(kMaxPrec)));

  std::string eval_expr, limit_expr, prod_a, prod_b, reduce_expr, count_expr, verify_name,
      verify_x, verify_tol, mellin_expr, cont_expr;
  long count_all_w = 0, count_a_w = 0, count_d_w = 0, count_h_w = 0, count_adh_w = 0;
  long verify_n = 0, mellin_n = 0, mellin_xpow = 0;
  bool mellin_over = false, cont_odd = false, cont_even = false;

  auto* c_eval = app.add_subcommand("eval", "evaluate an expression exactly or numerically");
  c_eval->add_option("expr", eval_expr, "expression, e.g. S[-2,1,1](20) or H[0,1,1](0.3)")
      ->required();

  auto* c_limit = app.add_subcommand("limit", "N -> infinity limit of a sum");
  c_limit->add_option("expr", limit_expr, "sum, index-only or with an (inf) argument")->required();

  auto* c_prod = app.add_subcommand("product", "stuffle of sum indices / shuffle of words");
  c_prod->add_option("left", prod_a, "first factor")->required();
  c_prod->add_option("right", prod_b, "second factor")->required();

  auto* c_reduce = app.add_subcommand("reduce", "rewrite over the basic-sum basis");
  c_reduce->add_option("expr", reduce_expr, "harmonic sum index, e.g. S[2,1]")->required();

  auto* c_count = app.add_subcommand("count", "index counts at fixed weight");
  // The --h selector below needs the short -h help alias out of the way.
  c_count->set_help_flag("--help", "print this help message and exit");
  c_count->add_option("expr", count_expr, "count[tag](w) with tag in all/a/d/h/adh");
  auto* o_all = c_count->add_option("--all", count_all_w, "all indices of this weight");
  auto* o_a = c_count->add_option("--a", count_a_w, "basic sums after algebraic relations");
  auto* o_d = c_count->add_option("--d", count_d_w, "after adding differentiation relations");
  auto* o_h = c_count->add_option("--h", count_h_w, "after adding argument-halving relations");
  auto* o_adh = c_count->add_option("--adh", count_adh_w, "after all three relation families");

  auto* c_verify = app.add_subcommand("verify", "run a built-in identity check");
  c_verify
      ->add_option("name", verify_name,
                   "one of mellin, argtransform, shuffle, duplication, elliptic")
      ->required();
  auto* o_vn = c_verify->add_option("--N", verify_n, "integer check argument");
  auto* o_vx = c_verify->add_option("--x", verify_x, "evaluation point in (0,1)");
  c_verify->add_option("--tol", verify_tol, "tolerance override, e.g. 1e-8");

  auto* c_mellin = app.add_subcommand("mellin", "Mellin moment of a polylog kernel");
  c_mellin->add_option("expr", mellin_expr, "index-only H word, optional");
  c_mellin->add_option("--N", mellin_n, "moment order")->required()->check(CLI::Range(0L, 200L));
  c_mellin->add_flag("--over-one-plus-x", mellin_over, "divide the kernel by 1+x");
  c_mellin->add_option("--xpow", mellin_xpow, "extra x^p factor")->check(CLI::Range(0L, 50L));

  auto* c_cont = app.add_subcommand("continue", "analytic continuation of a depth-1 sum");
  c_cont->add_option("expr", cont_expr, "S[a](z), z real or re+imi")->required();
  auto* o_odd = c_cont->add_flag("--odd", cont_odd, "continue from odd integer arguments");
  auto* o_even = c_cont->add_flag("--even", cont_even, "continue from even integer arguments");
  o_odd->excludes(o_even);

  for (CLI::App* sub :
       {c_eval, c_limit, c_prod, c_reduce, c_count, c_verify, c_mellin, c_cont})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  Settings st;
  st.json = json;
  st.prec = prec_opt > 0 ? static_cast<unsigned>(prec_opt) : env_precision();

  std::string cmd, input;
  try {
    ScopedPrecision sp(st.prec + 10);
    Outcome oc;
    if (app.got_subcommand(c_eval)) {
      cmd = "eval";
      input = eval_expr;
      oc = do_eval(eval_expr, st);
    } else if (app.got_subcommand(c_limit)) {
      cmd = "limit";
      input = limit_expr;
      oc = do_limit_cmd(limit_expr, st);
    } else if (app.got_subcommand(c_prod)) {
      cmd = "product";
      input = prod_a + " " + prod_b;
      oc = do_product(prod_a, prod_b, st);
    } else if (app.got_subcommand(c_reduce)) {
      cmd = "reduce";
      input = reduce_expr;
      oc = do_reduce(reduce_expr, st);
    } else if (app.got_subcommand(c_count)) {
      cmd = "count";
      input = count_expr;
      const bool from_expr = !count_expr.empty();
      int sources = from_expr ? 1 : 0;
      std::string tag;
      long w = 0;
      const std::pair<CLI::Option*, std::pair<const char*, long*>> flags[] = {
          {o_all, {"all", &count_all_w}}, {o_a, {"a", &count_a_w}},   {o_d, {"d", &count_d_w}},
          {o_h, {"h", &count_h_w}},       {o_adh, {"adh", &count_adh_w}}};
      for (const auto& [opt, tv] : flags)
        if (opt->count() > 0) {
          ++sources;
          tag = tv.first;
          w = *tv.second;
        }
      if (sources != 1)
        throw UsageError("count takes exactly one of an expression or --all/--a/--d/--h/--adh");
      if (from_expr) {
        const Expression e = parse(count_expr);
        const auto* c = std::get_if<CountExpr>(&e);
        if (!c) throw std::domain_error("count takes a count[tag](w) expression");
        tag = c->tag;
        w = c->weight;
      } else {
        input = "count[" + tag + "](" + std::to_string(w) + ")";
      }
      oc = outcome_integer(count_value(tag, w));
    } else if (app.got_subcommand(c_verify)) {
      cmd = "verify";
      VerifyExpr v;
      v.name = verify_name;
      if (v.name != "mellin" && v.name != "argtransform" && v.name != "shuffle" &&
          v.name != "duplication" && v.name != "elliptic")
        throw UsageError("unknown check '" + v.name +
                         "'; names: mellin, argtransform, shuffle, duplication, elliptic");
      const bool wants_n = v.name == "mellin" || v.name == "duplication" || v.name == "elliptic";
      if (wants_n) {
        if (o_vn->count() == 0 || o_vx->count() > 0)
          throw UsageError("verify " + v.name + " takes --N");
        v.arg = {Rational(verify_n), std::to_string(verify_n)};
      } else {
        if (o_vx->count() == 0 || o_vn->count() > 0)
          throw UsageError("verify " + v.name + " takes --x");
        v.arg = {flag_number(verify_x), verify_x};
      }
      input = "verify[" + v.name + "](" + v.arg.text + ")";
      std::optional<std::string> tol;
      if (!verify_tol.empty()) tol = verify_tol;
      oc = do_verify(v, tol);
    } else if (app.got_subcommand(c_mellin)) {
      cmd = "mellin";
      input = mellin_expr;
      oc = do_mellin(mellin_expr, mellin_n, mellin_over, mellin_xpow, st);
    } else {
      cmd = "continue";
      input = cont_expr;
      oc = do_continue(cont_expr, cont_odd ? Parity::odd : Parity::even, st);
    }
    emit_ok(out, st, cmd, input, oc);
    return oc.code;
  } catch (const SyntaxError& e) {
    emit_error(out, err, st, cmd, input, "syntax", e.what(), e.offset());
    return 2;
  } catch (const UsageError& e) {
    emit_error(out, err, st, cmd, input, "usage", e.what(), std::nullopt);
    return 2;
  } catch (const std::exception& e) {
    emit_error(out, err, st, cmd, input, "domain", e.what(), std::nullopt);
    return 1;
  }
}

}  // namespace nestsum::cli
