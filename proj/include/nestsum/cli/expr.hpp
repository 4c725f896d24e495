#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "nestsum/exact/numbers.hpp"
#include "nestsum/polylog/letters.hpp"

namespace nestsum::cli {

// Exact numeric literal plus its spelling, so printing reproduces the
// original notation (decimals are rationals with a power-of-ten denominator).
struct NumberLit {
  Rational value;
  std::string text;

  friend bool operator==(const NumberLit& a, const NumberLit& b) {
    return a.value == b.value && a.text == b.text;
  }
};

// Sum argument: a number, a complex literal re+-im i, or the symbol inf.
// The imaginary part's value carries its sign; its text is unsigned.
struct ArgLit {
  bool infinite = false;
  NumberLit re;
  std::optional<NumberLit> im;

  friend bool operator==(const ArgLit&, const ArgLit&) = default;
};

// S[...](...) in one of three families, told apart by the index shape and
// the presence of a brace-weight block:
//   S[-2,1,1](20)            harmonic
//   S[1,2]({1/2,-1};5)       generalized (positive exponents, weights)
//   S[(2,1,1)](10)           cyclotomic triples (a,b,c), optional weights
// The argument may be omitted for index-only uses (product, reduce, limit).
struct SumExpr {
  enum class Family { harmonic, general, cyclotomic };
  Family family = Family::harmonic;
  std::vector<int> entries;
  std::vector<std::array<long, 3>> triples;
  std::vector<NumberLit> weights;
  std::optional<ArgLit> arg;

  friend bool operator==(const SumExpr&, const SumExpr&) = default;
};

// H[...](x) or Hs[...](x); the argument may be omitted for index-only uses.
struct PolylogExpr {
  bool star = false;
  PolyLogWord word;
  std::optional<NumberLit> x;

  friend bool operator==(const PolylogExpr&, const PolylogExpr&) = default;
};

// count[tag](w), tag in {all, a, d, h, adh}.
struct CountExpr {
  std::string tag;
  long weight = 0;

  friend bool operator==(const CountExpr&, const CountExpr&) = default;
};

// verify[name](arg), name in {mellin, argtransform, shuffle, duplication,
// elliptic}.
struct VerifyExpr {
  std::string name;
  NumberLit arg;

  friend bool operator==(const VerifyExpr&, const VerifyExpr&) = default;
};

using Expression = std::variant<SumExpr, PolylogExpr, CountExpr, VerifyExpr>;

// Malformed input: byte offset plus the token set acceptable there.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, std::string expected, const std::string& found);
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

// Parses one expression; the whole input must be consumed. Throws
// SyntaxError for malformed text and std::domain_error for well-formed text
// with invalid content (zero index entry, bad cyclotomic triple, ...).
Expression parse(const std::string& input);

// Canonical rendering; parse(print(e)) == e for every valid expression.
std::string print(const Expression& e);

}  // namespace nestsum::cli
