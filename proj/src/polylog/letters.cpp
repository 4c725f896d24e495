#include "nestsum/polylog/letters.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

#include "nestsum/exact/number_theory.hpp"

namespace nestsum {

PolyLetter PolyLetter::harmonic(int b) {
  if (b != 0 && b != 1 && b != -1) throw std::domain_error("harmonic letter must be 0, 1 or -1");
  return root(Rational(b));
}

PolyLetter PolyLetter::root(Rational b) {
  PolyLetter p;
  p.kind_ = Kind::root;
  p.b_ = std::move(b);
  return p;
}

PolyLetter PolyLetter::cyclotomic(long k, long l) {
  if (k < 1) throw std::domain_error("cyclotomic letter needs k >= 1");
  if (l < 0 || Int(l) >= totient(k)) throw std::domain_error("cyclotomic letter needs 0 <= l < phi(k)");
  PolyLetter p;
  p.kind_ = Kind::cyclotomic;
  p.k_ = k;
  p.l_ = l;
  return p;
}

PolyLetter PolyLetter::sqrt_form(Sqrt s) {
  PolyLetter p;
  p.kind_ = Kind::sqrt_form;
  p.s_ = s;
  return p;
}

const Rational& PolyLetter::root_value() const {
  if (kind_ != Kind::root) throw std::logic_error("not a root letter");
  return b_;
}

long PolyLetter::cyc_k() const {
  if (kind_ != Kind::cyclotomic) throw std::logic_error("not a cyclotomic letter");
  return k_;
}

long PolyLetter::cyc_l() const {
  if (kind_ != Kind::cyclotomic) throw std::logic_error("not a cyclotomic letter");
  return l_;
}

PolyLetter::Sqrt PolyLetter::sqrt_kind() const {
  if (kind_ != Kind::sqrt_form) throw std::logic_error("not a sqrt-form letter");
  return s_;
}

BigFloat PolyLetter::value(const BigFloat& y) const {
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  switch (kind_) {
    case Kind::root:
      if (b_ == Rational(1)) return 1 / (1 - y);
      return 1 / (y - b_.to_bigfloat());
    case Kind::cyclotomic: {
      BigFloat num = l_ == 0 ? BigFloat(1) : pow(y, static_cast<unsigned>(l_));
      return num / cyclotomic_poly(k_).eval(y);
    }
    case Kind::sqrt_form:
      switch (s_) {
        case Sqrt::w12: return 1 / sqrt(y * (8 - y));
        case Sqrt::w13: return 1 / ((2 - y) * sqrt(y * (8 - y)));
        case Sqrt::w17: return 1 / sqrt(y * (8 + y));
        case Sqrt::w18: return 1 / ((2 + y) * sqrt(y * (8 + y)));
      }
  }
  throw std::logic_error("unreachable letter kind");
}

bool PolyLetter::singular_at_one() const {
  if (kind_ == Kind::root) return b_ == Rational(1);
  if (kind_ == Kind::cyclotomic) return k_ == 1;
  return false;
}

std::optional<Rational> PolyLetter::interior_pole() const {
  if (kind_ == Kind::root && b_ > Rational(0) && b_ < Rational(1)) return b_;
  return std::nullopt;
}

std::optional<int> PolyLetter::as_harmonic() const {
  if (kind_ != Kind::root || !b_.is_integer()) return std::nullopt;
  if (b_ == Rational(0)) return 0;
  if (b_ == Rational(1)) return 1;
  if (b_ == Rational(-1)) return -1;
  return std::nullopt;
}

bool PolyLetter::is_root_zero() const { return kind_ == Kind::root && b_.is_zero(); }

bool PolyLetter::is_root_one() const { return kind_ == Kind::root && b_ == Rational(1); }

std::string PolyLetter::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::root:
      os << b_;
      break;
    case Kind::cyclotomic:
      os << '{' << k_ << ',' << l_ << '}';
      break;
    case Kind::sqrt_form:
      switch (s_) {
        case Sqrt::w12: os << "w12"; break;
        case Sqrt::w13: os << "w13"; break;
        case Sqrt::w17: os << "w17"; break;
        case Sqrt::w18: os << "w18"; break;
      }
      break;
  }
  return os.str();
}

bool operator==(const PolyLetter& a, const PolyLetter& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case PolyLetter::Kind::root: return a.b_ == b.b_;
    case PolyLetter::Kind::cyclotomic: return a.k_ == b.k_ && a.l_ == b.l_;
    case PolyLetter::Kind::sqrt_form: return a.s_ == b.s_;
  }
  return false;
}

bool operator<(const PolyLetter& a, const PolyLetter& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  switch (a.kind_) {
    case PolyLetter::Kind::root: return a.b_ < b.b_;
    case PolyLetter::Kind::cyclotomic: return std::tie(a.k_, a.l_) < std::tie(b.k_, b.l_);
    case PolyLetter::Kind::sqrt_form: return a.s_ < b.s_;
  }
  return false;
}

PolyLogWord PolyLogWord::harmonic(const std::vector<int>& bs) {
  std::vector<PolyLetter> ls;
  ls.reserve(bs.size());
  for (int b : bs) ls.push_back(PolyLetter::harmonic(b));
  return PolyLogWord(std::move(ls));
}

bool PolyLogWord::all_harmonic() const {
  for (const auto& l : letters_)
    if (!l.as_harmonic()) return false;
  return true;
}

int PolyLogWord::trailing_zeros() const {
  int n = 0;
  for (auto it = letters_.rbegin(); it != letters_.rend() && it->is_root_zero(); ++it) ++n;
  return n;
}

std::string PolyLogWord::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ',';
    s += letters_[i].str();
  }
  return s + "]";
}

bool operator<(const PolyLogWord& a, const PolyLogWord& b) {
  return std::lexicographical_compare(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                      b.letters_.end(),
                                      [](const PolyLetter& x, const PolyLetter& y) { return x < y; });
}

}  // namespace nestsum
