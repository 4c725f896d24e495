#pragma once

#include <map>
#include <utility>

#include "nestsum/exact/numbers.hpp"

namespace nestsum {

// Formal rational linear combination of keys. Zero coefficients are pruned,
// so equal combinations compare equal structurally.
template <typename Key>
class LinComb {
 public:
  using Terms = std::map<Key, Rational>;

  LinComb() = default;

  static LinComb single(Key k, Rational c = Rational(1)) {
    LinComb out;
    out.add(std::move(k), std::move(c));
    return out;
  }

  void add(Key k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& r) {
    if (r.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= r;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Rational& r) { return a *= r; }
  friend LinComb operator*(const Rational& r, LinComb a) { return a *= r; }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

}  // namespace nestsum
