#include "nestsum/cli/expr.hpp"

#include <cctype>
#include <utility>

namespace nestsum::cli {

namespace {

std::string syntax_message(std::size_t offset, const std::string& expected,
                           const std::string& found) {
  return "syntax error at byte " + std::to_string(offset) + ": expected " + expected + ", found " +
         found;
}

[[noreturn]] void semantic(const std::string& what) {
  throw std::domain_error("semantic error: " + what);
}

// Digit run to Int; leading zeros are stripped so the GMP string constructor
// does not read them as an octal prefix.
Int int_from_digits(const std::string& s) {
  const std::size_t p = s.find_first_not_of('0');
  if (p == std::string::npos) return Int(0);
  return Int(s.substr(p));
}

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool at_end() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char raw() const { return i < s.size() ? s[i] : '\0'; }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& expected) {
    skip_ws();
    const std::string found = i < s.size() ? "'" + std::string(1, s[i]) + "'" : "end of input";
    throw SyntaxError(i, expected, found);
  }
  void expect(char c) {
    if (!eat(c)) fail("'" + std::string(1, c) + "'");
  }

  std::string ident() {
    skip_ws();
    const std::size_t b = i;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(b, i - b);
  }

  // Raw digit run, no whitespace skipping (callers position the cursor).
  std::string digit_run(const char* what) {
    const std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == b) fail(what);
    if (i - b > 18) {
      i = b;
      fail("a shorter integer");
    }
    return s.substr(b, i - b);
  }

  long integer(const char* what) {
    skip_ws();
    bool neg = false;
    if (raw() == '-') {
      ++i;
      neg = true;
    }
    const long v = std::stol(digit_run(what));
    return neg ? -v : v;
  }

  // Number literal: [-] digits [ '.' digits | '/' digits ]. allow_decimal
  // narrows to the rational-only positions (index letters).
  NumberLit number(bool allow_sign, bool allow_decimal, const char* what) {
    skip_ws();
    const std::size_t b = i;
    bool neg = false;
    if (allow_sign && raw() == '-') {
      ++i;
      neg = true;
    }
    const std::string ip = digit_run(what);
    Rational val;
    if (raw() == '.') {
      if (!allow_decimal) fail("a rational (no decimal point here)");
      ++i;
      const std::string fp = digit_run("decimal digits");
      Int den(1);
      for (std::size_t k = 0; k < fp.size(); ++k) den *= 10;
      val = Rational(int_from_digits(ip + fp), den);
    } else if (raw() == '/') {
      ++i;
      const std::string q = digit_run("a denominator");
      const Int qi = int_from_digits(q);
      if (qi == 0) semantic("zero denominator");
      val = Rational(int_from_digits(ip), qi);
    } else {
      val = Rational(int_from_digits(ip));
    }
    if (neg) val = -val;
    return {val, s.substr(b, i - b)};
  }
};

PolyLetter parse_letter(Cursor& c) {
  if (c.peek() == '{') {
    c.expect('{');
    const long k = c.integer("a cyclotomic index k");
    c.expect(',');
    const long l = c.integer("a cyclotomic index l");
    c.expect('}');
    return PolyLetter::cyclotomic(k, l);
  }
  if (c.peek() == 'w') {
    const std::size_t b = c.i;
    ++c.i;
    std::size_t d = c.i;
    while (d < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[d]))) ++d;
    const std::string tag = c.s.substr(b, d - b);
    c.i = d;
    if (tag == "w12") return PolyLetter::sqrt_form(PolyLetter::Sqrt::w12);
    if (tag == "w13") return PolyLetter::sqrt_form(PolyLetter::Sqrt::w13);
    if (tag == "w17") return PolyLetter::sqrt_form(PolyLetter::Sqrt::w17);
    if (tag == "w18") return PolyLetter::sqrt_form(PolyLetter::Sqrt::w18);
    c.i = b;
    c.fail("'w12', 'w13', 'w17' or 'w18'");
  }
  const NumberLit n = c.number(true, false, "a letter");
  return PolyLetter::root(n.value);
}

ArgLit parse_argument(Cursor& c) {
  ArgLit a;
  if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
    const std::size_t b = c.i;
    if (c.ident() == "inf") {
      a.infinite = true;
      return a;
    }
    c.i = b;
    c.fail("a number or 'inf'");
  }
  a.re = c.number(true, true, "a number or 'inf'");
  const char sep = c.peek();
  if (sep == '+' || sep == '-') {
    ++c.i;
    NumberLit im = c.number(false, true, "an imaginary part");
    if (sep == '-') im.value = -im.value;
    if (!c.eat('i')) c.fail("'i'");
    a.im = std::move(im);
  }
  return a;
}

SumExpr parse_sum(Cursor& c) {
  SumExpr e;
  c.expect('[');
  if (c.peek() == '(') {
    e.family = SumExpr::Family::cyclotomic;
    do {
      c.expect('(');
      const long a = c.integer("a triple entry");
      c.expect(',');
      const long b = c.integer("a triple entry");
      c.expect(',');
      const long cc = c.integer("a triple entry");
      c.expect(')');
      e.triples.push_back({a, b, cc});
    } while (c.eat(','));
  } else {
    do {
      e.entries.push_back(static_cast<int>(c.integer("an index entry")));
    } while (c.eat(','));
  }
  c.expect(']');
  if (c.peek() == '(') {
    c.expect('(');
    if (c.peek() == '{') {
      c.expect('{');
      do {
        e.weights.push_back(c.number(true, false, "a weight"));
      } while (c.eat(','));
      c.expect('}');
      c.expect(';');
      if (e.family == SumExpr::Family::harmonic) e.family = SumExpr::Family::general;
    }
    e.arg = parse_argument(c);
    c.expect(')');
  }

  if (e.family == SumExpr::Family::harmonic) {
    for (int v : e.entries)
      if (v == 0) semantic("zero index entry");
  } else if (e.family == SumExpr::Family::general) {
    for (int v : e.entries)
      if (v < 1) semantic("generalized sums take positive exponents");
    if (e.weights.size() != e.entries.size())
      semantic("weight count must match the index depth");
    for (const auto& w : e.weights)
      if (w.value.is_zero()) semantic("zero weight");
  } else {
    for (const auto& t : e.triples) {
      if (!(t[0] > t[1] && t[1] >= 0)) semantic("cyclotomic triple requires a > b >= 0");
      if (t[2] < 1) semantic("cyclotomic exponent must be positive");
    }
    if (!e.weights.empty() && e.weights.size() != e.triples.size())
      semantic("weight count must match the index depth");
    for (const auto& w : e.weights)
      if (w.value.is_zero()) semantic("zero weight");
  }
  return e;
}

PolylogExpr parse_polylog(Cursor& c, bool star) {
  PolylogExpr e;
  e.star = star;
  c.expect('[');
  std::vector<PolyLetter> letters;
  do {
    letters.push_back(parse_letter(c));
  } while (c.eat(','));
  c.expect(']');
  e.word = PolyLogWord(std::move(letters));
  if (c.peek() == '(') {
    c.expect('(');
    e.x = c.number(true, true, "an argument");
    c.expect(')');
  }
  return e;
}

CountExpr parse_count(Cursor& c) {
  CountExpr e;
  c.expect('[');
  const std::size_t b = c.i;
  e.tag = c.ident();
  if (e.tag != "all" && e.tag != "a" && e.tag != "d" && e.tag != "h" && e.tag != "adh") {
    c.i = b;
    c.fail("'all', 'a', 'd', 'h' or 'adh'");
  }
  c.expect(']');
  c.expect('(');
  e.weight = c.integer("a weight");
  c.expect(')');
  if (e.weight < 1) semantic("weight must be >= 1");
  return e;
}

VerifyExpr parse_verify(Cursor& c) {
  VerifyExpr e;
  c.expect('[');
  const std::size_t b = c.i;
  e.name = c.ident();
  if (e.name != "mellin" && e.name != "argtransform" && e.name != "shuffle" &&
      e.name != "duplication" && e.name != "elliptic") {
    c.i = b;
    c.fail("'mellin', 'argtransform', 'shuffle', 'duplication' or 'elliptic'");
  }
  c.expect(']');
  c.expect('(');
  e.arg = c.number(true, true, "an argument");
  c.expect(')');
  return e;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::string expected, const std::string& found)
    : std::runtime_error(syntax_message(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected)) {}

Expression parse(const std::string& input) {
  Cursor c{input};
  c.skip_ws();
  const std::size_t head_at = c.i;
  const std::string head = c.ident();
  Expression out;
  if (head == "S") {
    out = parse_sum(c);
  } else if (head == "H") {
    out = parse_polylog(c, false);
  } else if (head == "Hs") {
    out = parse_polylog(c, true);
  } else if (head == "count") {
    out = parse_count(c);
  } else if (head == "verify") {
    out = parse_verify(c);
  } else {
    c.i = head_at;
    c.fail("'S', 'H', 'Hs', 'count' or 'verify'");
  }
  if (!c.at_end()) c.fail("end of input");
  return out;
}

namespace {

std::string print_arg(const ArgLit& a) {
  if (a.infinite) return "inf";
  std::string s = a.re.text;
  if (a.im) {
    s += a.im->value < Rational(0) ? "-" : "+";
    s += a.im->text;
    s += "i";
  }
  return s;
}

struct Printer {
  std::string operator()(const SumExpr& e) const {
    std::string s = "S[";
    if (e.family == SumExpr::Family::cyclotomic) {
      for (std::size_t i = 0; i < e.triples.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(e.triples[i][0]) + "," + std::to_string(e.triples[i][1]) + "," +
             std::to_string(e.triples[i][2]) + ")";
      }
    } else {
      for (std::size_t i = 0; i < e.entries.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e.entries[i]);
      }
    }
    s += "]";
    if (e.arg) {
      s += "(";
      if (!e.weights.empty()) {
        s += "{";
        for (std::size_t i = 0; i < e.weights.size(); ++i) {
          if (i) s += ",";
          s += e.weights[i].text;
        }
        s += "};";
      }
      s += print_arg(*e.arg) + ")";
    }
    return s;
  }

  std::string operator()(const PolylogExpr& e) const {
    std::string s = e.star ? "Hs[" : "H[";
    const auto& ls = e.word.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (i) s += ",";
      s += ls[i].str();
    }
    s += "]";
    if (e.x) s += "(" + e.x->text + ")";
    return s;
  }

  std::string operator()(const CountExpr& e) const {
    return "count[" + e.tag + "](" + std::to_string(e.weight) + ")";
  }

  std::string operator()(const VerifyExpr& e) const {
    return "verify[" + e.name + "](" + e.arg.text + ")";
  }
};

}  // namespace

std::string print(const Expression& e) { return std::visit(Printer{}, e); }

}  // namespace nestsum::cli
