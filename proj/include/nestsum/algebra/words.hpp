#pragma once

#include <compare>
#include <cstdlib>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "nestsum/exact/numbers.hpp"

namespace nestsum {

// Index of a nested harmonic sum: nonzero integers, first entry outermost.
// The magnitude is the exponent, the sign the alternation.
struct HarmonicIndex {
  std::vector<int> entries;

  HarmonicIndex() = default;
  HarmonicIndex(std::initializer_list<int> e) : entries(e) { validate(); }
  explicit HarmonicIndex(std::vector<int> e) : entries(std::move(e)) { validate(); }

  int depth() const { return static_cast<int>(entries.size()); }
  int weight() const {
    int w = 0;
    for (int a : entries) w += std::abs(a);
    return w;
  }
  bool empty() const { return entries.empty(); }
  // The sum converges as N -> infinity iff the leading entry is not 1.
  bool convergent_at_infinity() const { return entries.empty() || entries.front() != 1; }

  auto operator<=>(const HarmonicIndex&) const = default;

 private:
  void validate() const {
    for (int a : entries)
      if (a == 0) throw std::invalid_argument("harmonic index entries must be nonzero");
  }
};

// One level of a generalized sum: weight^k / k^exponent.
struct SEntry {
  int exponent = 1;   // positive integer
  Rational weight;    // nonzero

  friend bool operator==(const SEntry& a, const SEntry& b) {
    return a.exponent == b.exponent && a.weight == b.weight;
  }
  friend bool operator<(const SEntry& a, const SEntry& b) {
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    return a.weight < b.weight;
  }
};

// Index of a generalized (S-)sum; first entry outermost.
struct GeneralIndex {
  std::vector<SEntry> entries;

  GeneralIndex() = default;
  GeneralIndex(std::initializer_list<SEntry> e) : entries(e) { validate(); }
  explicit GeneralIndex(std::vector<SEntry> e) : entries(std::move(e)) { validate(); }

  // Harmonic index a_i |-> exponent |a_i|, weight sign(a_i).
  static GeneralIndex from_harmonic(const HarmonicIndex& h) {
    GeneralIndex g;
    for (int a : h.entries)
      g.entries.push_back({std::abs(a), Rational(a > 0 ? 1 : -1)});
    return g;
  }

  int depth() const { return static_cast<int>(entries.size()); }
  int weight() const {
    int w = 0;
    for (const auto& e : entries) w += e.exponent;
    return w;
  }
  bool empty() const { return entries.empty(); }

  friend bool operator==(const GeneralIndex& a, const GeneralIndex& b) {
    return a.entries == b.entries;
  }
  friend bool operator<(const GeneralIndex& a, const GeneralIndex& b) {
    return a.entries < b.entries;
  }

 private:
  void validate() const {
    for (const auto& e : entries) {
      if (e.exponent < 1) throw std::invalid_argument("s-sum exponents must be positive");
      if (e.weight.is_zero()) throw std::invalid_argument("s-sum weights must be nonzero");
    }
  }
};

// One level of a nested cyclotomic sum: s^k / (a k + b)^c with a > b >= 0.
struct CycEntry {
  long a = 1;
  long b = 0;
  int c = 1;
  Rational s;

  friend bool operator==(const CycEntry& x, const CycEntry& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.s == y.s;
  }
  friend bool operator<(const CycEntry& x, const CycEntry& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.c != y.c) return x.c < y.c;
    return x.s < y.s;
  }
};

// Index of a nested cyclotomic sum (summation from k = 1).
struct CyclotomicIndex {
  std::vector<CycEntry> entries;

  CyclotomicIndex() = default;
  CyclotomicIndex(std::initializer_list<CycEntry> e) : entries(e) { validate(); }
  explicit CyclotomicIndex(std::vector<CycEntry> e) : entries(std::move(e)) { validate(); }

  int depth() const { return static_cast<int>(entries.size()); }
  int weight() const {
    int w = 0;
    for (const auto& e : entries) w += e.c;
    return w;
  }

  friend bool operator==(const CyclotomicIndex& x, const CyclotomicIndex& y) {
    return x.entries == y.entries;
  }
  friend bool operator<(const CyclotomicIndex& x, const CyclotomicIndex& y) {
    return x.entries < y.entries;
  }

 private:
  void validate() const {
    for (const auto& e : entries) {
      if (!(e.a > e.b && e.b >= 0)) throw std::invalid_argument("cyclotomic entry requires a > b >= 0");
      if (e.c < 1) throw std::invalid_argument("cyclotomic exponents must be positive");
      if (e.s.is_zero()) throw std::invalid_argument("cyclotomic weights must be nonzero");
    }
  }
};

// Rank of a harmonic letter in the basis order 1 < -1 < 2 < -2 < ...
inline int harmonic_letter_rank(int a) {
  if (a == 0) throw std::invalid_argument("harmonic letters are nonzero");
  return 2 * (std::abs(a) - 1) + (a < 0 ? 1 : 0);
}

struct HarmonicLetterLess {
  bool operator()(int a, int b) const { return harmonic_letter_rank(a) < harmonic_letter_rank(b); }
};

}  // namespace nestsum
